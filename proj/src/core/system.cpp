#include "system.hpp"

namespace ratdiff {

SystemSpec SystemSpec::sys1(int k) {
    if (k < 1) throw DomainError("SysOne requires k >= 1");
    return SystemSpec{Family::SysOne, k, 0};
}

SystemSpec SystemSpec::sys2(int k, int m) {
    if (k < 1) throw DomainError("SysTwo requires k >= 1");
    if (m < 0) throw DomainError("SysTwo requires m >= 0");
    return SystemSpec{Family::SysTwo, k, m};
}

InitialConditions::InitialConditions(const SystemSpec& spec,
                                     std::vector<Rational> x_init,
                                     std::vector<Rational> y_init)
    : x_(std::move(x_init)), y_(std::move(y_init)) {
    const auto expected = static_cast<std::size_t>(spec.nu()) + 1;
    if (x_.size() != expected || y_.size() != expected)
        throw DomainError("initial segments must have nu+1 = " +
                          std::to_string(expected) + " entries each");
    all_positive_ = true;
    for (const auto* seq : {&x_, &y_}) {
        for (const auto& v : *seq) {
            if (v.is_zero()) throw DomainError("initial values must be nonzero");
            if (!v.is_positive()) all_positive_ = false;
        }
    }
}

const RationalPair& Orbit::at(long n) const {
    if (n < start_index_ || n > last_index()) throw IndexOutOfRange(n);
    return points_[static_cast<std::size_t>(n - start_index_)];
}

}  // namespace ratdiff
