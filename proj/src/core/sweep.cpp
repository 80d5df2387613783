#include "sweep.hpp"

#include <algorithm>

#include "random_init.hpp"
#include "simulate.hpp"

namespace ratdiff {

std::vector<SweepRow> run_sweep(int k_max, int m_max, int n_seeds, long bit_budget) {
    if (k_max < 1 || k_max > 8 || m_max < 0 || m_max > 8)
        throw DomainError("sweep grid is limited to k_max, m_max <= 8");
    if (n_seeds < 1) throw DomainError("need at least one seed");

    std::vector<SweepRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        for (int m = 0; m <= m_max; ++m) {
            const auto spec = SystemSpec::sys2(k, m);
            const long p_max = default_p_max(spec);
            const long stride = canonical_stride(spec);
            for (int s = 1; s <= n_seeds; ++s) {
                const auto seed = static_cast<std::uint64_t>(s);
                const auto init = random_positive_initials(spec, seed);
                const BehaviorClass predicted = classify(spec, init);

                const long n_steps = std::max(3 * p_max, 3 * stride + 1);
                const Orbit orbit = iterate(spec, init, n_steps, bit_budget);
                const PeriodReport report = minimal_period(orbit, p_max);
                const bool unbounded = is_unbounded_empirical(orbit, stride);

                bool agree = false;
                if (predicted.verdict == Verdict::Periodic)
                    agree = report.minimal_period.has_value() &&
                            predicted.stated_period % *report.minimal_period == 0;
                else
                    agree = unbounded && !report.minimal_period.has_value();

                rows.push_back(SweepRow{k, m, seed, predicted, report.minimal_period,
                                        unbounded, agree});
            }
        }
    }
    return rows;
}

}  // namespace ratdiff
