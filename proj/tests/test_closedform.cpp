#include <doctest.h>

#include "core/closedform.hpp"
#include "core/random_init.hpp"
#include "core/simulate.hpp"

using namespace ratdiff;

namespace {

// Integer-valued trig on the quarter grid, for checking the proof's
// identities without floating point: cos(t*pi/2) and sin(t*pi/2).
int cos_quarter(long t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return 1;
        case 2: return -1;
        default: return 0;
    }
}

int sin_quarter(long t) {
    switch (((t % 4) + 4) % 4) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}

ClosedFormParams params_for(ClosedForm form, const SystemSpec& spec, std::uint64_t seed) {
    return ClosedFormParams::make(form, spec, random_positive_initials(spec, seed));
}

}  // namespace

TEST_CASE("xi case table") {
    CHECK(xi(0) == 1);
    CHECK(xi(1) == 0);
    CHECK(xi(2) == -1);
    CHECK(xi(3) == 0);
    CHECK(xi(-3) == 0);   // -3 = 1 (mod 4)
    CHECK(xi(-2) == -1);
    CHECK(xi(100) == 1);
}

TEST_CASE("xi identities from the proof hold on [-50, 50]") {
    for (long s = -50; s <= 50; ++s) {
        CHECK(xi(s) == -cos_quarter(s + 2));
        CHECK(xi(s - 1) == sin_quarter(s));
    }
}

TEST_CASE("eval_s3: r=0 worked example") {
    const auto spec = SystemSpec::sys2(1, 0);
    const InitialConditions init(spec, {Rational(1), Rational(2)},
                                 {Rational(5), Rational(3)});  // A = 6
    const auto params = ClosedFormParams::make(ClosedForm::S3, spec, init);
    CHECK(eval_s3(params, 3).first == Rational(6, 5));   // x_3
    CHECK(eval_s3(params, 2).second == Rational(18));    // y_2 = A * y_0
    CHECK(eval_s3(params, 1).first == Rational(1, 5));
    CHECK(eval_s3(params, 1).second == Rational(5, 6));
}

TEST_CASE("eval_s3: A=1 collapses to period k+1 repetition of initials") {
    const auto spec = SystemSpec::sys2(3, 0);
    const InitialConditions init(
        spec, {Rational(2), Rational(7), Rational(5), Rational(4)},
        {Rational(3), Rational(9), Rational(8), Rational(1, 4)});
    const auto params = ClosedFormParams::make(ClosedForm::S3, spec, init);
    for (long n = 1; n <= 40; ++n) {
        const auto now = eval_s3(params, n);
        const auto later = eval_s3(params, n + 4);
        CHECK(now == later);
    }
}

TEST_CASE("eval_s4: r=1 worked example") {
    const auto spec = SystemSpec::sys2(3, 1);
    const InitialConditions init(
        spec, {Rational(6), Rational(7), Rational(1), Rational(1)},
        {Rational(5), Rational(11), Rational(2), Rational(3)});  // B = 2, A = 3
    const auto params = ClosedFormParams::make(ClosedForm::S4, spec, init);
    CHECK(eval_s4(params, 1).second == Rational(5, 2));  // y_1 = y_{-3}/(x_{-1} y_{-1})
    // s = 2r+2 with q = 0: the prefactor vanishes and x_{2r+2} = 1/y_0
    CHECK(eval_s4(params, 4).first == Rational(1, 3));
}

TEST_CASE("eval_s4: A=B=1 is periodic with period 2r+2") {
    const auto spec = SystemSpec::sys2(3, 1);
    const InitialConditions init(
        spec, {Rational(6), Rational(7), Rational(1, 2), Rational(1, 3)},
        {Rational(5), Rational(11), Rational(2), Rational(3)});
    const auto params = ClosedFormParams::make(ClosedForm::S4, spec, init);
    for (long n = 1; n <= 40; ++n) CHECK(eval_s4(params, n) == eval_s4(params, n + 4));
}

TEST_CASE("eval_s5: the twelve-term k=5 listing") {
    const auto spec = SystemSpec::sys2(5, 1);
    // distinct primes as stand-ins for the symbols
    const InitialConditions init(
        spec,
        {Rational(29), Rational(31), Rational(37), Rational(41), Rational(2), Rational(3)},
        {Rational(5), Rational(7), Rational(11), Rational(13), Rational(17), Rational(19)});
    const auto params = ClosedFormParams::make(ClosedForm::S5, spec, init);
    const Rational a = Rational(3) * Rational(19);   // x_0 y_0
    const Rational b = Rational(2) * Rational(17);   // x_{-1} y_{-1}

    CHECK(eval_s5(params, 7).first == b / Rational(5));   // x_7 = B / y_{-5}
    CHECK(eval_s5(params, 1).second == Rational(5) / b);  // y_1 = y_{-5} / B
    CHECK(eval_s5(params, 8).first == a / Rational(7));   // x_8 = A / y_{-4}
    CHECK(eval_s5(params, 9).first == (b * Rational(11)).reciprocal());
    CHECK(eval_s5(params, 11).first == Rational(2));      // x_11 = x_{-1}
    CHECK(eval_s5(params, 12).first == Rational(3));      // x_12 = x_0
    CHECK(eval_s5(params, 12).second == Rational(19));    // y_12 = y_0
    CHECK(eval_s5(params, 5).second == Rational(1, 2));   // y_5 = 1/x_{-1}
}

TEST_CASE("eval_s5 output is periodic with period 4(2k'+1)") {
    for (int k : {5, 9}) {
        const auto spec = SystemSpec::sys2(k, 1);
        const auto params = params_for(ClosedForm::S5, spec, 23);
        const long rho = 2L * (k + 1);
        for (long n = 1; n <= 3 * rho; ++n)
            CHECK(eval_s5(params, n) == eval_s5(params, n + rho));
    }
}

TEST_CASE("eval_s3 with A > 1 grows strictly along odd residues") {
    const auto spec = SystemSpec::sys2(1, 0);
    const InitialConditions init(spec, {Rational(1), Rational(2)},
                                 {Rational(5), Rational(3)});  // A = 6 > 1
    const auto params = ClosedFormParams::make(ClosedForm::S3, spec, init);
    // x at odd residue s=1: indices 1, 3, 5, ... strictly increasing in q
    for (long q = 0; q < 30; ++q)
        CHECK(eval_s3(params, 2 * q + 1).first < eval_s3(params, 2 * (q + 1) + 1).first);
}

TEST_CASE("oracle equivalence: closed forms match simulation exactly") {
    for (int k : {1, 3, 5, 7}) {  // r <= 3
        const auto spec = SystemSpec::sys2(k, 0);
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            CHECK_FALSE(verify_closed_form(ClosedForm::S3, spec,
                                           random_positive_initials(spec, seed), 200)
                            .has_value());
    }
    for (int k : {3, 7}) {
        const auto spec = SystemSpec::sys2(k, 1);
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            CHECK_FALSE(verify_closed_form(ClosedForm::S4, spec,
                                           random_positive_initials(spec, seed), 200)
                            .has_value());
    }
    for (int k : {5, 9}) {  // k' <= 2
        const auto spec = SystemSpec::sys2(k, 1);
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            CHECK_FALSE(verify_closed_form(ClosedForm::S5, spec,
                                           random_positive_initials(spec, seed), 200)
                            .has_value());
    }
}

TEST_CASE("shape validation") {
    const auto s51 = SystemSpec::sys2(5, 1);
    CHECK_THROWS_AS(params_for(ClosedForm::S4, s51, 1), IncompatibleShape);  // 5 != 3 (mod 4)
    CHECK_THROWS_AS(params_for(ClosedForm::S3, SystemSpec::sys2(2, 0), 1), IncompatibleShape);
    CHECK_THROWS_AS(params_for(ClosedForm::S5, SystemSpec::sys2(3, 1), 1), IncompatibleShape);
    CHECK_THROWS_AS(params_for(ClosedForm::S3, SystemSpec::sys2(1, 1), 1), IncompatibleShape);
}
