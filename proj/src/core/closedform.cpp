#include "closedform.hpp"

#include "simulate.hpp"

namespace ratdiff {

int xi(long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return 1;
        case 2: return -1;
        default: return 0;
    }
}

namespace {

void check_shape(ClosedForm form, int k, int m) {
    switch (form) {
        case ClosedForm::S3:
            if (m != 0 || k % 2 == 0)
                throw IncompatibleShape("s3 needs m = 0 and odd k (k = 2r+1)");
            break;
        case ClosedForm::S4:
            if (m != 1 || k % 4 != 3)
                throw IncompatibleShape("s4 needs m = 1 and k = 3 (mod 4)");
            break;
        case ClosedForm::S5:
            if (m != 1 || k % 4 != 1 || k < 5)
                throw IncompatibleShape("s5 needs m = 1 and k = 4k'+1 with k' >= 1");
            break;
    }
}

// The theorems index time as n = P*q + s with two residue windows: s in
// [1, P] on the x side and s in [-(P-1), 0] on the y side. Centralizing the
// split here keeps all three evaluators off-by-one free.
struct ResidueSplit {
    long q;
    long s;
};

ResidueSplit split_high(long n, long period) {  // s in [1, period]
    const long q = (n - 1) / period;
    return {q, n - period * q};
}

ResidueSplit split_low(long n, long period) {  // s in [-(period-1), 0]
    const long q = (n + period - 1) / period;
    return {q, n - period * q};
}

bool odd(long s) { return ((s % 2) + 2) % 2 == 1; }

}  // namespace

ClosedFormParams ClosedFormParams::make(ClosedForm form, const SystemSpec& spec,
                                        const InitialConditions& init) {
    if (spec.family != Family::SysTwo) throw IncompatibleShape("closed forms are Sys. 2 only");
    check_shape(form, spec.k, spec.m);
    if (init.nu() != spec.nu()) throw DomainError("initial conditions do not match the system spec");
    return ClosedFormParams{spec.k, init.x(), init.y()};
}

const Rational& ClosedFormParams::x_at(long n) const {
    if (n < -k || n > 0) throw IndexOutOfRange(n);
    return x_init[static_cast<std::size_t>(n + k)];
}

const Rational& ClosedFormParams::y_at(long n) const {
    if (n < -k || n > 0) throw IndexOutOfRange(n);
    return y_init[static_cast<std::size_t>(n + k)];
}

RationalPair eval_s3(const ClosedFormParams& params, long n) {
    check_shape(ClosedForm::S3, params.k, 0);
    if (n < 1) throw IndexOutOfRange(n);
    const long period = params.k + 1;  // 2r+2
    const Rational a = params.a();

    const auto [qx, sx] = split_high(n, period);
    const Rational ax = a.pow(qx);
    Rational x = odd(sx) ? ax / params.y_at(sx - period)
                         : (ax * params.y_at(sx - period)).reciprocal();

    const auto [qy, sy] = split_low(n, period);
    const Rational ay = a.pow(qy);
    Rational y = odd(sy) ? params.y_at(sy) / ay : ay * params.y_at(sy);
    return {std::move(x), std::move(y)};
}

RationalPair eval_s4(const ClosedFormParams& params, long n) {
    check_shape(ClosedForm::S4, params.k, 1);
    if (n < 1) throw IndexOutOfRange(n);
    const long period = params.k + 1;  // 2r+2
    const Rational a = params.a();
    const Rational b = params.b();

    const auto [qx, sx] = split_high(n, period);
    Rational x = odd(sx) ? b.pow(qx * xi(sx - 1)) / params.y_at(sx - period)
                         : a.pow(-qx * xi(sx)) / params.y_at(sx - period);

    const auto [qy, sy] = split_low(n, period);
    Rational y = odd(sy) ? params.y_at(sy) * b.pow(-qy * xi(sy - 1))
                         : params.y_at(sy) * a.pow(qy * xi(sy));
    return {std::move(x), std::move(y)};
}

RationalPair eval_s5(const ClosedFormParams& params, long n) {
    check_shape(ClosedForm::S5, params.k, 1);
    if (n < 1) throw IndexOutOfRange(n);
    const long half = params.k + 1;    // 4k'+2
    const long period = 2 * half;      // rho = 4(2k'+1)
    const long s = (n - 1) % period + 1;

    if (s <= half) {  // Omega_1
        const Rational& y0 = params.y_at(s - half);
        const Rational factor = params.a().pow(xi(s)) * params.b().pow(-xi(s - 1));
        return {y0.reciprocal(), y0 * factor};
    }
    // Omega_2: the second residue window re-enters the initial segment at
    // sigma = s - rho; xi(sigma) = xi(s) since rho = 0 (mod 4).
    const long sigma = s - period;
    const Rational& y0 = params.y_at(sigma);
    const Rational factor = params.a().pow(xi(s)) * params.b().pow(-xi(s - 1));
    return {factor / y0, y0};
}

RationalPair eval_closed_form(ClosedForm form, const ClosedFormParams& params, long n) {
    switch (form) {
        case ClosedForm::S3: return eval_s3(params, n);
        case ClosedForm::S4: return eval_s4(params, n);
        case ClosedForm::S5: return eval_s5(params, n);
    }
    throw DomainError("unknown closed form");
}

std::optional<long> verify_closed_form(ClosedForm form, const SystemSpec& spec,
                                       const InitialConditions& init, long n_max,
                                       long bit_budget) {
    const auto params = ClosedFormParams::make(form, spec, init);
    const Orbit orbit = iterate(spec, init, n_max, bit_budget);
    for (long n = 1; n <= n_max; ++n)
        if (eval_closed_form(form, params, n) != orbit.at(n)) return n;
    return std::nullopt;
}

}  // namespace ratdiff
