#pragma once

#include <cstdint>
#include <vector>

#include "classify.hpp"
#include "detect.hpp"

namespace ratdiff {

// One cell of the Sys. 2 coverage grid: predicted behavior next to what the
// empirical detectors saw on a seeded random orbit.
struct SweepRow {
    int k;
    int m;
    std::uint64_t seed;
    BehaviorClass predicted;
    std::optional<long> detected_period;
    bool detected_unbounded;
    bool agree;
};

// Runs Sys. 2 for every k in [1, k_max], m in [0, m_max] and seeds 1..n_seeds,
// with generic positive random initials. A row agrees when the detected
// minimal period divides the predicted stated period (Periodic) or the
// geometric-stride certificate fires (Unbounded).
std::vector<SweepRow> run_sweep(int k_max, int m_max, int n_seeds,
                                long bit_budget = 1L << 16);

}  // namespace ratdiff
