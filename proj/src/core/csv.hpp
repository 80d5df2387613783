#pragma once

#include <string>

#include "sweep.hpp"
#include "system.hpp"

namespace ratdiff {

// Orbit rows as `n,x_exact,y_exact,x_float,y_float`, exact values in the
// canonical "p/q" rendering. Byte-deterministic for a fixed orbit.
std::string orbit_to_csv(const Orbit& orbit);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace ratdiff
