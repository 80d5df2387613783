#include "random_init.hpp"

namespace ratdiff {

InitialConditions random_positive_initials(const SystemSpec& spec, std::uint64_t seed) {
    Lcg rng(seed);
    const auto count = static_cast<std::size_t>(spec.nu()) + 1;
    std::vector<Rational> x, y;
    x.reserve(count);
    y.reserve(count);
    for (std::size_t i = 0; i < count; ++i) x.emplace_back(rng.next_small(), rng.next_small());
    for (std::size_t i = 0; i < count; ++i) y.emplace_back(rng.next_small(), rng.next_small());
    return InitialConditions(spec, std::move(x), std::move(y));
}

}  // namespace ratdiff
