#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace ratdiff {

// Arbitrary-precision signed rational, always held in canonical form:
// denominator > 0, gcd(|num|, den) = 1, zero is 0/1. This is the only
// scalar type in the core; all orbit arithmetic is exact.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den);

    // Accepts "-?digits" or "-?digits/digits". Throws ParseError on
    // malformed text and ZeroDenominator on ".../0".
    static Rational from_string(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_positive() const { return sgn(value_) > 0; }
    bool is_one() const { return value_ == 1; }

    Rational reciprocal() const;

    // Exact integer power; negative exponents go through the reciprocal.
    Rational pow(long exponent) const;

    // Largest of the numerator/denominator bit lengths.
    std::size_t bit_size() const;

    // Canonical rendering: "p/q", with "/q" omitted when q = 1.
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Rational(a.value_ / b.value_);
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_;
};

}  // namespace ratdiff
