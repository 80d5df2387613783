#include <doctest.h>

#include "core/classify.hpp"
#include "core/detect.hpp"
#include "core/random_init.hpp"
#include "core/simulate.hpp"

using namespace ratdiff;

namespace {

BehaviorClass classify_generic(const SystemSpec& spec, std::uint64_t seed = 1) {
    return classify(spec, random_positive_initials(spec, seed));
}

}  // namespace

TEST_CASE("SysOne is always periodic with period 3(k+1)") {
    const auto bc = classify_generic(SystemSpec::sys1(2));
    CHECK(bc.verdict == Verdict::Periodic);
    CHECK(bc.stated_period == 9);
    CHECK(bc.generic_minimal_period == 9);
    CHECK(bc.rule == Rule::T1);
}

TEST_CASE("SysTwo m=k: period 2k+2") {
    const auto bc = classify_generic(SystemSpec::sys2(3, 3));
    CHECK(bc.verdict == Verdict::Periodic);
    CHECK(bc.stated_period == 8);
    CHECK(bc.rule == Rule::S2_i);
}

TEST_CASE("SysTwo product-one initials: period k+1") {
    const auto spec = SystemSpec::sys2(3, 0);
    const InitialConditions init(
        spec, {Rational(2), Rational(7), Rational(5), Rational(4)},
        {Rational(3), Rational(9), Rational(8), Rational(1, 4)});  // x_0 y_0 = 1
    const auto bc = classify(spec, init);
    CHECK(bc.verdict == Verdict::Periodic);
    CHECK(bc.stated_period == 4);
    CHECK(bc.rule == Rule::S2_ii);
}

TEST_CASE("SysTwo k even: stated 2(k+1)(m+1), generic lcm refinement") {
    const auto bc = classify_generic(SystemSpec::sys2(4, 2));
    CHECK(bc.verdict == Verdict::Periodic);
    CHECK(bc.stated_period == 30);
    CHECK(bc.generic_minimal_period == 30);
    CHECK(bc.rule == Rule::S2_iiia);

    // k=2, m=5: the stated formula 36 is not minimal; lcm(3, 12) = 12
    const auto refined = classify_generic(SystemSpec::sys2(2, 5));
    CHECK(refined.stated_period == 36);
    CHECK(refined.generic_minimal_period == 12);
    CHECK(refined.stated_period % refined.generic_minimal_period == 0);
}

TEST_CASE("SysTwo k odd m even: unbounded") {
    const auto bc = classify_generic(SystemSpec::sys2(3, 2));
    CHECK(bc.verdict == Verdict::Unbounded);
    CHECK(bc.rule == Rule::S2_iiib);
}

TEST_CASE("SysTwo 2(m+1) = k+1: unbounded via (iii)(c)") {
    const auto bc = classify_generic(SystemSpec::sys2(3, 1));
    CHECK(bc.verdict == Verdict::Unbounded);
    CHECK(bc.rule == Rule::S2_iiic);
}

TEST_CASE("SysTwo both odd, simple roots: periodic lcm(k+1, 2(m+1))") {
    const auto bc = classify_generic(SystemSpec::sys2(5, 1));
    CHECK(bc.verdict == Verdict::Periodic);
    CHECK(bc.stated_period == 12);
    CHECK(bc.generic_minimal_period == 12);
    CHECK(bc.rule == Rule::S2_iiid_corrected);
}

TEST_CASE("the pair (7, 11) satisfies the published (iii)(d) but is unbounded") {
    const auto bc = classify_generic(SystemSpec::sys2(7, 11));
    CHECK(bc.verdict == Verdict::Unbounded);
    CHECK(bc.rule == Rule::S2_iiid_corrected);
}

TEST_CASE("nonpositive initials are rejected") {
    const auto spec = SystemSpec::sys2(1, 0);
    const InitialConditions init(spec, {Rational(-1), Rational(2)},
                                 {Rational(5), Rational(3)});
    CHECK_FALSE(init.all_positive());
    CHECK_THROWS_AS(classify(spec, init), NonPositiveInitials);
}

TEST_CASE("classifier agrees with the empirical oracle on a small grid") {
    for (int k = 1; k <= 4; ++k) {
        for (int m = 0; m <= 4; ++m) {
            const auto spec = SystemSpec::sys2(k, m);
            for (std::uint64_t seed = 1; seed <= 2; ++seed) {
                const auto init = random_positive_initials(spec, seed);
                const auto bc = classify(spec, init);
                const long p_max = default_p_max(spec);
                const long stride = canonical_stride(spec);
                const Orbit orbit = iterate(spec, init,
                                            std::max(3 * p_max, 3 * stride + 1), 1L << 16);
                if (bc.verdict == Verdict::Periodic) {
                    const auto report = minimal_period(orbit, p_max);
                    REQUIRE(report.minimal_period.has_value());
                    CHECK(bc.stated_period % *report.minimal_period == 0);
                    CHECK(*report.minimal_period == bc.generic_minimal_period);
                } else {
                    CHECK(is_unbounded_empirical(orbit, stride));
                }
            }
        }
    }
}
