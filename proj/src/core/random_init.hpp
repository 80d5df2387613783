#pragma once

#include <cstdint>

#include "system.hpp"

namespace ratdiff {

// Fixed linear-congruential generator so seeded experiments are
// reproducible across platforms and toolchains (Knuth's MMIX constants):
//   state <- state * 6364136223846793005 + 1442695040888963407
// Each draw uses the top 31 bits of the new state.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }

    // Uniform in [1, 1000].
    long next_small() { return static_cast<long>(next() % 1000) + 1; }

private:
    std::uint64_t state_;
};

// Generic positive initial data: every entry p/q with p, q drawn uniformly
// from [1, 1000].
InitialConditions random_positive_initials(const SystemSpec& spec, std::uint64_t seed);

}  // namespace ratdiff
