#pragma once

#include <optional>

#include "system.hpp"

namespace ratdiff {

// Result of exact minimal-period detection. When minimal_period holds a
// value p, (x_{n+p}, y_{n+p}) = (x_n, y_n) exactly for all
// preperiod <= n - start <= checked_up_to - p, and no smaller shift works.
struct PeriodReport {
    std::optional<long> minimal_period;
    long preperiod;       // points before the periodic tail, from orbit start
    long checked_up_to;   // last orbit index covered by the check
};

// Default search bound: twice the largest published period plus slack.
long default_p_max(const SystemSpec& spec);

// Canonical stride for the geometric-subsequence analysis:
// 3(k+1) for Sys. 1, lcm(k+1, 2(m+1)) for Sys. 2.
long canonical_stride(const SystemSpec& spec);

// Smallest p <= p_max such that the full state window of nu+1 consecutive
// pairs repeats with shift p, verified over the whole stored orbit.
// Requires orbit length >= 3 * p_max.
PeriodReport minimal_period(const Orbit& orbit, long p_max);

// True iff every stride subsequence y_{stride*n + t} (t in [0, stride),
// n >= 0) is exactly geometric: y_{s(n+2)+t} * y_{sn+t} = y_{s(n+1)+t}^2.
// Holds for every orbit of both systems at the canonical stride, since all
// characteristic roots satisfy lambda^stride = 1 with multiplicity <= 2.
bool geometric_stride_check(const Orbit& orbit, long stride);

// Structural unboundedness certificate: the stride subsequences are exactly
// geometric and at least one common ratio differs from 1, so some
// subsequence grows (or vanishes) geometrically.
bool is_unbounded_empirical(const Orbit& orbit, long stride);

}  // namespace ratdiff
