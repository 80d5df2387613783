#include "classify.hpp"

#include <numeric>

namespace ratdiff {

const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::T1: return "T1";
        case Rule::S2_i: return "S2_i";
        case Rule::S2_ii: return "S2_ii";
        case Rule::S2_iiia: return "S2_iiia";
        case Rule::S2_iiib: return "S2_iiib";
        case Rule::S2_iiic: return "S2_iiic";
        case Rule::S2_iiid_corrected: return "S2_iiid_corrected";
    }
    return "?";
}

namespace {

bool product_condition(const SystemSpec& spec, const InitialConditions& init) {
    for (long i = -spec.m; i <= 0; ++i)
        if (!(init.x_at(i) * init.y_at(i)).is_one()) return false;
    return true;
}

}  // namespace

BehaviorClass classify(const SystemSpec& spec, const InitialConditions& init) {
    if (!init.all_positive()) throw NonPositiveInitials();

    if (spec.family == Family::SysOne) {
        const long p = 3L * (spec.k + 1);
        return {Verdict::Periodic, p, p, Rule::T1};
    }

    const int k = spec.k;
    const int m = spec.m;

    if (m == k) {
        const long p = 2L * k + 2;
        return {Verdict::Periodic, p, p, Rule::S2_i};
    }
    if (product_condition(spec, init)) {
        const long p = k + 1;
        return {Verdict::Periodic, p, p, Rule::S2_ii};
    }
    if (k % 2 == 0) {
        const long stated = 2L * (k + 1) * (m + 1);
        return {Verdict::Periodic, stated, std::lcm<long>(k + 1, 2L * (m + 1)), Rule::S2_iiia};
    }
    if (m % 2 == 0) return {Verdict::Unbounded, 0, 0, Rule::S2_iiib};

    // Both delays odd. The published clause (iii)(c) covers part of the
    // repeated-root region; everything else repeated is (iii)(d) territory
    // misclassified by the paper, hence the _corrected tag.
    if (has_repeated_root(k, m)) {
        const bool iiic = (k % 4 == 3 && m % 4 == 1) || (2 * (m + 1) == k + 1);
        return {Verdict::Unbounded, 0, 0, iiic ? Rule::S2_iiic : Rule::S2_iiid_corrected};
    }
    const long p = std::lcm<long>(k + 1, 2L * (m + 1));
    return {Verdict::Periodic, p, p, Rule::S2_iiid_corrected};
}

}  // namespace ratdiff
