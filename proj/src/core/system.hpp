#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace ratdiff {

enum class Family { SysOne, SysTwo };

// Which system is being iterated, plus its delays.
//   SysOne: x_{n+1} = 1/y_{n-k},  y_{n+1} = x_{n-k}/y_{n-k}          (k >= 1)
//   SysTwo: x_{n+1} = 1/y_{n-k},  y_{n+1} = y_{n-k}/(x_{n-m} y_{n-m}) (k >= 1, m >= 0)
struct SystemSpec {
    Family family;
    int k;
    int m;  // meaningful for SysTwo only

    static SystemSpec sys1(int k);
    static SystemSpec sys2(int k, int m);

    // Largest delay: the initial segment occupies indices -nu..0.
    int nu() const { return family == Family::SysOne ? k : std::max(k, m); }
};

using RationalPair = std::pair<Rational, Rational>;

// Initial data x_{-nu}..x_0 and y_{-nu}..y_0, stored in increasing index
// order. Every entry must be nonzero; classification additionally needs
// all entries positive.
class InitialConditions {
public:
    InitialConditions(const SystemSpec& spec,
                      std::vector<Rational> x_init,
                      std::vector<Rational> y_init);

    const std::vector<Rational>& x() const { return x_; }
    const std::vector<Rational>& y() const { return y_; }
    bool all_positive() const { return all_positive_; }
    int nu() const { return static_cast<int>(x_.size()) - 1; }

    // Entry at index n, -nu <= n <= 0.
    const Rational& x_at(long n) const { return x_.at(static_cast<std::size_t>(n + nu())); }
    const Rational& y_at(long n) const { return y_.at(static_cast<std::size_t>(n + nu())); }

private:
    std::vector<Rational> x_, y_;
    bool all_positive_;
};

// An exact trajectory {(x_n, y_n)} from index start_index (= -nu) onward.
class Orbit {
public:
    Orbit(SystemSpec spec, long start_index, std::vector<RationalPair> points)
        : spec_(spec), start_index_(start_index), points_(std::move(points)) {}

    const SystemSpec& spec() const { return spec_; }
    long start_index() const { return start_index_; }
    long last_index() const { return start_index_ + static_cast<long>(points_.size()) - 1; }
    std::size_t size() const { return points_.size(); }

    const RationalPair& at(long n) const;
    const Rational& x(long n) const { return at(n).first; }
    const Rational& y(long n) const { return at(n).second; }
    const std::vector<RationalPair>& points() const { return points_; }

private:
    SystemSpec spec_;
    long start_index_;
    std::vector<RationalPair> points_;
};

}  // namespace ratdiff
