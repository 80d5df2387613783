#include "simulate.hpp"



namespace ratdiff {

RationalPair step(const SystemSpec& spec, std::span<const RationalPair> history) {
    const auto nu = static_cast<std::size_t>(spec.nu());
    if (history.size() != nu + 1) throw DomainError("history must hold nu+1 pairs");

    const auto& [x_mk, y_mk] = history[nu - static_cast<std::size_t>(spec.k)];
    Rational x_next = y_mk.reciprocal();
    if (spec.family == Family::SysOne) return {std::move(x_next), x_mk / y_mk};

    const auto& [x_mm, y_mm] = history[nu - static_cast<std::size_t>(spec.m)];
    return {std::move(x_next), y_mk / (x_mm * y_mm)};
}

SimulationResult iterate_partial(const SystemSpec& spec, const InitialConditions& init,
                                 long n_steps, long bit_budget) {
    if (n_steps < 1) throw DomainError("n_steps must be positive");
    if (bit_budget < 1) throw DomainError("bit_budget must be positive");
    const int nu = spec.nu();
    if (init.nu() != nu) throw DomainError("initial conditions do not match the system spec");

    std::vector<RationalPair> points;
    points.reserve(static_cast<std::size_t>(nu + 1 + n_steps));
    for (long n = -nu; n <= 0; ++n) points.emplace_back(init.x_at(n), init.y_at(n));

    // Sliding window of the last nu+1 pairs; the full orbit is materialized
    // in `points` as we go.
    std::vector<RationalPair> window(points.begin(), points.end());
    const auto budget = static_cast<std::size_t>(bit_budget);

    for (long n = 1; n <= n_steps; ++n) {
        RationalPair next;
        try {
            next = step(spec, window);
        } catch (const DivisionByZero&) {
            throw DivisionByZero(n);
        }
        if (next.first.bit_size() > budget || next.second.bit_size() > budget)
            return {Orbit(spec, -nu, std::move(points)), SimulationStatus::BudgetExceeded, n};
        points.push_back(next);
        window.erase(window.begin());
        window.push_back(std::move(next));
    }
    return {Orbit(spec, -nu, std::move(points)), SimulationStatus::Ok, 0};
}

Orbit iterate(const SystemSpec& spec, const InitialConditions& init,
              long n_steps, long bit_budget) {
    auto result = iterate_partial(spec, init, n_steps, bit_budget);
    if (result.status == SimulationStatus::BudgetExceeded)
        throw BudgetExceeded(result.fail_index);
    return std::move(result.orbit);
}

std::vector<Rational> product_sequence(const Orbit& orbit) {
    if (orbit.size() == 0) throw DomainError("empty orbit");
    std::vector<Rational> products;
    products.reserve(orbit.size());
    for (const auto& [x, y] : orbit.points()) products.push_back(x * y);
    return products;
}

}  // namespace ratdiff
