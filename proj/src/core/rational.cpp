#include "rational.hpp"

#include <algorithm>
#include <cctype>

namespace ratdiff {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw ZeroDenominator();
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos
                               ? std::string_view("1")
                               : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
        throw ParseError("not a rational literal: '" + std::string(text) + "'");

    mpq_class v{mpz_class(std::string(num)), mpz_class(std::string(den))};
    if (sgn(v.get_den()) == 0) throw ZeroDenominator();
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(1 / value_);
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    mpq_class result;
    mpz_pow_ui(result.get_num_mpz_t(), value_.get_num_mpz_t(),
               static_cast<unsigned long>(exponent));
    mpz_pow_ui(result.get_den_mpz_t(), value_.get_den_mpz_t(),
               static_cast<unsigned long>(exponent));
    return Rational(std::move(result));  // canonical since base is canonical
}

std::size_t Rational::bit_size() const {
    return std::max(mpz_sizeinbase(value_.get_num_mpz_t(), 2),
                    mpz_sizeinbase(value_.get_den_mpz_t(), 2));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace ratdiff
