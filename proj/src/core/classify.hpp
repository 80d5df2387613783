#pragma once

#include <string>

#include "linearize.hpp"
#include "system.hpp"

namespace ratdiff {

enum class Verdict { Periodic, Unbounded };

// Which classification clause fired. The S2_* tags follow the published
// case split for Sys. 2; S2_iiid_corrected replaces the both-odd cases with
// the repeated-root criterion (the published clause (iii)(d) admits
// parameter pairs with a repeated root, which are in fact unbounded).
enum class Rule { T1, S2_i, S2_ii, S2_iiia, S2_iiib, S2_iiic, S2_iiid_corrected };

const char* rule_name(Rule rule);

struct BehaviorClass {
    Verdict verdict;
    long stated_period;          // the published period formula (Periodic only)
    long generic_minimal_period; // minimal period for generic initials (Periodic only)
    Rule rule;
};

// Behavior of the orbit started from `init` (which must be all-positive;
// the classification argument runs through logarithms).
BehaviorClass classify(const SystemSpec& spec, const InitialConditions& init);

}  // namespace ratdiff
