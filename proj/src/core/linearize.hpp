#pragma once

#include <optional>
#include <vector>

#include "system.hpp"

namespace ratdiff {

// Dense integer recurrence sum_i c_i * a_{n+1-i} = 0, monic in a_{n+1}
// (c_0 = 1), for a_n = ln y_n.
struct LinearRecurrence {
    std::vector<long> coefficients;  // c_0..c_d
    long order() const { return static_cast<long>(coefficients.size()) - 1; }
};

// A characteristic root exp(2*pi*i * j/q), stored as the reduced turn j/q
// with 0 <= j < q (q = 1 encodes the root 1). The order of the root is q.
struct UnityRoot {
    long turn_num;
    long turn_den;
    int multiplicity;

    static UnityRoot reduced(long j, long q, int multiplicity = 1);
    friend bool operator==(const UnityRoot&, const UnityRoot&) = default;
};

struct UnityRootMultiset {
    std::vector<UnityRoot> roots;
    long total_degree;  // = sum of multiplicities = degree of the polynomial
};

// The log-linearized recurrence of the system.
//   SysOne:         a_{n+1} + a_{n-k} + a_{n-2k-1} = 0             (order 2k+2)
//   SysTwo, m != k: a_{n+1} + a_{n-m} - a_{n-k} - a_{n-m-k-1} = 0  (order m+k+2)
//   SysTwo, m == k: the middle terms cancel, leaving a_{n+1} = a_{n-2k-1}
LinearRecurrence log_linearize(const SystemSpec& spec);

// All characteristic roots as exact turns with multiplicities.
//   SysOne: the 2k+2 roots with lambda^{k+1} a primitive cube root of unity.
//   SysTwo: (k+1)-th roots of unity, together with the solutions of
//           lambda^{m+1} = -1; multiplicity 2 where the two sets meet.
UnityRootMultiset characteristic_roots(const SystemSpec& spec);

// Whether SysTwo's characteristic polynomial has a repeated root.
// Closed form: v2(k+1) > v2(m+1), with v2 the 2-adic valuation.
bool has_repeated_root(int k, int m);

// Independent oracle: exhaustive search for 2j(m+1) = (2l+1)(k+1) over
// j in [0,k], l in [0,m].
bool brute_force_repeated_root(int k, int m);

// lcm of the orders of all characteristic roots when they are simple
// (SysOne: 3(k+1); SysTwo: lcm(k+1, 2(m+1))); nullopt when a repeated root
// makes generic log-solutions unbounded.
std::optional<long> generic_period(const SystemSpec& spec);

// 2-adic valuation; v2(0) is undefined and rejected.
int v2(long n);

}  // namespace ratdiff
