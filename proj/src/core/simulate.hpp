#pragma once

#include <span>
#include <vector>

#include "system.hpp"

namespace ratdiff {

// One step of either system. `history` holds the last nu+1 pairs in
// increasing index order, i.e. history[0] is (x_{n-nu}, y_{n-nu}) and
// history[nu] is (x_n, y_n); the result is (x_{n+1}, y_{n+1}).
RationalPair step(const SystemSpec& spec, std::span<const RationalPair> history);

enum class SimulationStatus { Ok, BudgetExceeded };

// Partial-orbit result so callers (CSV export in particular) can keep the
// prefix computed before the budget tripped.
struct SimulationResult {
    Orbit orbit;
    SimulationStatus status;
    long fail_index;  // first index that overflowed; meaningful when status != Ok
};

// Iterates the system for n_steps steps past index 0. The orbit covers
// indices -nu..n_steps when it completes. Any value whose numerator or
// denominator exceeds bit_budget bits stops the run with BudgetExceeded;
// exponential regimes are expected to hit this.
SimulationResult iterate_partial(const SystemSpec& spec, const InitialConditions& init,
                                 long n_steps, long bit_budget);

// As iterate_partial, but throws BudgetExceeded instead of returning a prefix.
Orbit iterate(const SystemSpec& spec, const InitialConditions& init,
              long n_steps, long bit_budget = 4096);

// p_n := x_n * y_n for every stored index.
std::vector<Rational> product_sequence(const Orbit& orbit);

}  // namespace ratdiff
