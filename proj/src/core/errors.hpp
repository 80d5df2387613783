#pragma once

#include <stdexcept>
#include <string>

namespace ratdiff {

// Error taxonomy shared by the whole library. The C API maps each of these
// onto a ratdiff_status code; the CLI maps them onto process exit codes.

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : DomainError {
    ZeroDenominator() : DomainError("zero denominator") {}
};

struct DivisionByZero : DomainError {
    DivisionByZero() : DomainError("division by zero") {}
    explicit DivisionByZero(long index)
        : DomainError("division by zero at index " + std::to_string(index)) {}
};

struct ParseError : DomainError {
    explicit ParseError(const std::string& what) : DomainError("parse error: " + what) {}
};

struct NonPositiveInitials : DomainError {
    NonPositiveInitials() : DomainError("classification requires strictly positive initial values") {}
};

struct IndexOutOfRange : DomainError {
    explicit IndexOutOfRange(long index)
        : DomainError("index out of range: " + std::to_string(index)) {}
};

struct OrbitTooShort : DomainError {
    OrbitTooShort() : DomainError("orbit too short for the requested analysis") {}
};

struct IncompatibleShape : DomainError {
    explicit IncompatibleShape(const std::string& what)
        : DomainError("incompatible shape: " + what) {}
};

// Thrown by the simulator when a numerator or denominator outgrows the
// configured bit budget; `index` is the first orbit index that overflowed.
struct BudgetExceeded : std::runtime_error {
    long index;
    explicit BudgetExceeded(long idx)
        : std::runtime_error("bit budget exceeded at index " + std::to_string(idx)),
          index(idx) {}
};

}  // namespace ratdiff
