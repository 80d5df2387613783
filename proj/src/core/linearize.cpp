#include "linearize.hpp"

#include <map>
#include <numeric>

namespace ratdiff {

UnityRoot UnityRoot::reduced(long j, long q, int multiplicity) {
    if (q <= 0) throw DomainError("turn denominator must be positive");
    j = ((j % q) + q) % q;
    const long g = std::gcd(j, q);
    return UnityRoot{j / g, j == 0 ? 1 : q / g, multiplicity};
}

LinearRecurrence log_linearize(const SystemSpec& spec) {
    if (spec.family == Family::SysOne) {
        // offsets 0, k+1, 2k+2, all with coefficient +1
        std::vector<long> c(static_cast<std::size_t>(2 * spec.k + 3), 0);
        c[0] = 1;
        c[static_cast<std::size_t>(spec.k + 1)] = 1;
        c[static_cast<std::size_t>(2 * spec.k + 2)] = 1;
        return {std::move(c)};
    }
    // a_{n+1} + a_{n-m} - a_{n-k} - a_{n-m-k-1} = 0; when m = k the two
    // middle terms cancel and the dense form keeps the zeros.
    std::vector<long> c(static_cast<std::size_t>(spec.m + spec.k + 3), 0);
    c[0] += 1;
    c[static_cast<std::size_t>(spec.m + 1)] += 1;
    c[static_cast<std::size_t>(spec.k + 1)] -= 1;
    c[static_cast<std::size_t>(spec.m + spec.k + 2)] -= 1;
    return {std::move(c)};
}

UnityRootMultiset characteristic_roots(const SystemSpec& spec) {
    // map reduced turn -> multiplicity, ordered by angle
    const auto by_angle = [](const std::pair<long, long>& a, const std::pair<long, long>& b) {
        return a.first * b.second < b.first * a.second;
    };
    std::map<std::pair<long, long>, int, decltype(by_angle)> mult(by_angle);
    auto add = [&mult](long j, long q) {
        const auto root = UnityRoot::reduced(j, q);
        mult[{root.turn_num, root.turn_den}] += 1;
    };

    long degree = 0;
    if (spec.family == Family::SysOne) {
        // lambda^{k+1} in {exp(2pi i/3), exp(4pi i/3)}: turns c/(3(k+1)),
        // c not divisible by 3.
        const long d = 3L * (spec.k + 1);
        for (long c = 0; c < d; ++c)
            if (c % 3 != 0) add(c, d);
        degree = 2L * (spec.k + 1);
    } else {
        for (long j = 0; j <= spec.k; ++j) add(j, spec.k + 1);
        for (long l = 0; l <= spec.m; ++l) add(2 * l + 1, 2L * (spec.m + 1));
        degree = static_cast<long>(spec.k + spec.m + 2);
    }

    UnityRootMultiset result{{}, degree};
    for (const auto& [turn, m] : mult)
        result.roots.push_back(UnityRoot{turn.first, turn.second, m});
    return result;
}

int v2(long n) {
    if (n == 0) throw DomainError("v2(0) is undefined");
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

bool has_repeated_root(int k, int m) {
    if (k < 1 || m < 0) throw DomainError("require k >= 1, m >= 0");
    return v2(k + 1) > v2(m + 1);
}

bool brute_force_repeated_root(int k, int m) {
    if (k < 1 || m < 0 || k > 64 || m > 64) throw DomainError("oracle scale is 1 <= k <= 64, 0 <= m <= 64");
    for (long j = 0; j <= k; ++j)
        for (long l = 0; l <= m; ++l)
            if (2 * j * (m + 1) == (2 * l + 1) * static_cast<long>(k + 1)) return true;
    return false;
}

std::optional<long> generic_period(const SystemSpec& spec) {
    if (spec.family == Family::SysTwo && has_repeated_root(spec.k, spec.m))
        return std::nullopt;
    long period = 1;
    for (const auto& root : characteristic_roots(spec).roots)
        period = std::lcm(period, root.turn_den);
    return period;
}

}  // namespace ratdiff
