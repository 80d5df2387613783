#include "csv.hpp"

#include <cstdio>

namespace ratdiff {

namespace {

std::string render_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string orbit_to_csv(const Orbit& orbit) {
    std::string out = "n,x_exact,y_exact,x_float,y_float\n";
    for (long n = orbit.start_index(); n <= orbit.last_index(); ++n) {
        const auto& [x, y] = orbit.at(n);
        out += std::to_string(n);
        out += ',';
        out += x.str();
        out += ',';
        out += y.str();
        out += ',';
        out += render_double(x.to_double());
        out += ',';
        out += render_double(y.to_double());
        out += '\n';
    }
    return out;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "k,m,seed,predicted,stated,generic,rule,detected_period,detected_unbounded,agree\n";
    for (const auto& row : rows) {
        const bool periodic = row.predicted.verdict == Verdict::Periodic;
        out += std::to_string(row.k) + ',' + std::to_string(row.m) + ',' +
               std::to_string(row.seed) + ',';
        out += periodic ? "Periodic" : "Unbounded";
        out += ',';
        if (periodic)
            out += std::to_string(row.predicted.stated_period) + ',' +
                   std::to_string(row.predicted.generic_minimal_period);
        else
            out += ',';
        out += ',';
        out += rule_name(row.predicted.rule);
        out += ',';
        if (row.detected_period) out += std::to_string(*row.detected_period);
        out += ',';
        out += row.detected_unbounded ? "true" : "false";
        out += ',';
        out += row.agree ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace ratdiff
