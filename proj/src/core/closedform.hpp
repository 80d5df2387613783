#pragma once

#include <optional>

#include "system.hpp"

namespace ratdiff {

// Integer kernel (i^n + (-i)^n)/2: 1, 0, -1, 0 for n = 0, 1, 2, 3 (mod 4),
// extended to negative n by the same congruence. Every trigonometric
// exponent in the closed forms reduces to this.
int xi(long n);

enum class ClosedForm { S3, S4, S5 };

// Parameter bundle shared by the three closed-form evaluators. The shapes
// are Sys. 2 instances with odd k:
//   S3: m = 0, k = 2r+1            (A := x_0 y_0 drives the solution)
//   S4: m = 1, k = 2r+1, k = 3 mod 4   (A and B := x_{-1} y_{-1})
//   S5: m = 1, k = 4k'+1, k >= 5       (periodic, period 4(2k'+1))
struct ClosedFormParams {
    int k;
    std::vector<Rational> x_init;  // indices -k..0
    std::vector<Rational> y_init;

    static ClosedFormParams make(ClosedForm form, const SystemSpec& spec,
                                 const InitialConditions& init);

    const Rational& x_at(long n) const;  // -k <= n <= 0
    const Rational& y_at(long n) const;
    Rational a() const { return x_at(0) * y_at(0); }
    Rational b() const { return x_at(-1) * y_at(-1); }
};

// Explicit solution values (x_n, y_n), n >= 1, straight from the displayed
// theorems; all exponents go through xi.
RationalPair eval_s3(const ClosedFormParams& params, long n);
RationalPair eval_s4(const ClosedFormParams& params, long n);
RationalPair eval_s5(const ClosedFormParams& params, long n);

RationalPair eval_closed_form(ClosedForm form, const ClosedFormParams& params, long n);

// Compares the closed form against forward simulation for 1 <= n <= n_max;
// returns the first mismatching index, or nullopt when everything agrees.
std::optional<long> verify_closed_form(ClosedForm form, const SystemSpec& spec,
                                       const InitialConditions& init, long n_max,
                                       long bit_budget = 1L << 20);

}  // namespace ratdiff
