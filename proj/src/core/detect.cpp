#include "detect.hpp"

#include <numeric>

namespace ratdiff {

long default_p_max(const SystemSpec& spec) {
    if (spec.family == Family::SysOne) return 6L * (spec.k + 1) + 6;
    return 4L * (spec.k + 1) * (spec.m + 1) + 4;
}

long canonical_stride(const SystemSpec& spec) {
    if (spec.family == Family::SysOne) return 3L * (spec.k + 1);
    return std::lcm<long>(spec.k + 1, 2L * (spec.m + 1));
}

PeriodReport minimal_period(const Orbit& orbit, long p_max) {
    if (p_max < 1) throw DomainError("p_max must be positive");
    if (static_cast<long>(orbit.size()) < 3 * p_max) throw OrbitTooShort();

    const long start = orbit.start_index();
    const long last = orbit.last_index();
    const long window = orbit.spec().nu() + 1;

    for (long p = 1; p <= p_max; ++p) {
        // Earliest n0 from which the shift-p match runs unbroken to the end.
        long n0 = last - p + 1;
        while (n0 - 1 >= start && orbit.at(n0 - 1) == orbit.at(n0 - 1 + p)) --n0;
        // A full state window matching its shift pins the whole tail, the
        // recurrence being deterministic of order nu+1.
        if (last - p - n0 + 1 >= window) return {p, n0 - start, last};
    }
    return {std::nullopt, 0, last};
}

bool geometric_stride_check(const Orbit& orbit, long stride) {
    if (stride < 1) throw DomainError("stride must be positive");
    const long last = orbit.last_index();
    if (orbit.start_index() > 0 || last < 3 * stride - 1) throw OrbitTooShort();

    for (long t = 0; t < stride; ++t)
        for (long i = t; i + 2 * stride <= last; i += stride)
            if (orbit.y(i) * orbit.y(i + 2 * stride) != orbit.y(i + stride).pow(2))
                return false;
    return true;
}

bool is_unbounded_empirical(const Orbit& orbit, long stride) {
    if (!geometric_stride_check(orbit, stride)) return false;
    for (long t = 0; t < stride; ++t)
        if (orbit.y(t + stride) != orbit.y(t)) return true;
    return false;
}

}  // namespace ratdiff
