// Command-line frontend over the ratdiff C API.
//
// Verbs: simulate, classify, verify, sweep. Experiments are described by a
// JSON config file; --seed/--iterations/--bit-budget/--out override the
// corresponding config fields. Exit codes: 0 success, 2 config/domain
// error, 3 bit budget exceeded, 4 closed-form verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratdiff.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

int exit_code_for(ratdiff_status status) {
    switch (status) {
        case RATDIFF_OK: return kExitOk;
        case RATDIFF_ERR_BUDGET: return kExitBudget;
        case RATDIFF_ERR_MISMATCH: return kExitMismatch;
        case RATDIFF_ERR_INTERNAL: return kExitInternal;
        default: return kExitDomain;
    }
}

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "ratdiff: " << message << "\n";
    std::exit(code);
}

struct SystemDeleter {
    void operator()(ratdiff_system* s) const { ratdiff_system_destroy(s); }
};
struct OrbitDeleter {
    void operator()(ratdiff_orbit* o) const { ratdiff_orbit_destroy(o); }
};
using SystemHandle = std::unique_ptr<ratdiff_system, SystemDeleter>;
using OrbitHandle = std::unique_ptr<ratdiff_orbit, OrbitDeleter>;

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<long> iterations;
    std::optional<long> bit_budget;
    std::optional<std::string> out;
};

json load_config(const Options& opts) {
    if (opts.config_path.empty()) return json::object();
    std::ifstream in(opts.config_path);
    if (!in) die(kExitDomain, "cannot open config file: " + opts.config_path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        die(kExitDomain, std::string("config parse error: ") + e.what());
    }
}

long config_long(const json& cfg, const char* key, std::optional<long> override_value,
                 long fallback) {
    if (override_value) return *override_value;
    if (cfg.contains(key)) return cfg.at(key).get<long>();
    return fallback;
}

SystemHandle build_system(const json& cfg) {
    const std::string family = cfg.value("system", "sys2");
    const int k = cfg.value("k", 0);
    ratdiff_system* raw = nullptr;
    ratdiff_status st;
    if (family == "sys1") {
        st = ratdiff_system_create_sys1(k, &raw);
    } else if (family == "sys2") {
        st = ratdiff_system_create_sys2(k, cfg.value("m", 0), &raw);
    } else {
        die(kExitDomain, "config field 'system' must be \"sys1\" or \"sys2\"");
    }
    if (st != RATDIFF_OK) die(exit_code_for(st), ratdiff_last_error());
    return SystemHandle(raw);
}

void set_initials(ratdiff_system* sys, const json& cfg,
                  std::optional<std::uint64_t> seed_override) {
    if (seed_override) {
        const auto st = ratdiff_system_set_random_initials(sys, *seed_override);
        if (st != RATDIFF_OK) die(exit_code_for(st), ratdiff_last_error());
        return;
    }
    if (!cfg.contains("init")) die(kExitDomain, "config needs 'init' or a --seed");
    const json& init = cfg.at("init");

    if (init.contains("random_positive")) {
        const auto seed = init.at("random_positive").at("seed").get<std::uint64_t>();
        const auto st = ratdiff_system_set_random_initials(sys, seed);
        if (st != RATDIFF_OK) die(exit_code_for(st), ratdiff_last_error());
        return;
    }

    const auto xs = init.at("x").get<std::vector<std::string>>();
    const auto ys = init.at("y").get<std::vector<std::string>>();
    if (xs.size() != ys.size()) die(kExitDomain, "init.x and init.y must have equal length");
    std::vector<const char*> xp, yp;
    for (const auto& s : xs) xp.push_back(s.c_str());
    for (const auto& s : ys) yp.push_back(s.c_str());
    const auto st = ratdiff_system_set_initials(sys, xp.data(), yp.data(), xp.size());
    if (st != RATDIFF_OK) die(exit_code_for(st), ratdiff_last_error());
}

void write_output(const Options& opts, const json& cfg, const std::string& text) {
    std::string path = opts.out.value_or(cfg.value("output", ""));
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitDomain, "cannot open output file: " + path);
    out << text;
}

int cmd_simulate(const Options& opts) {
    const json cfg = load_config(opts);
    auto sys = build_system(cfg);
    set_initials(sys.get(), cfg, opts.seed);

    const long iterations = config_long(cfg, "iterations", opts.iterations, 200);
    const long budget = config_long(cfg, "bit_budget", opts.bit_budget, 4096);

    ratdiff_orbit* raw = nullptr;
    const auto st = ratdiff_simulate(sys.get(), iterations, budget, &raw);
    OrbitHandle orbit(raw);
    if (st != RATDIFF_OK && st != RATDIFF_ERR_BUDGET)
        die(exit_code_for(st), ratdiff_last_error());

    char* csv = nullptr;
    if (ratdiff_orbit_csv(orbit.get(), &csv) != RATDIFF_OK)
        die(kExitInternal, ratdiff_last_error());
    write_output(opts, cfg, csv);
    ratdiff_string_free(csv);

    if (st == RATDIFF_ERR_BUDGET) {
        std::cerr << "ratdiff: " << ratdiff_last_error() << "\n";
        return kExitBudget;
    }
    return kExitOk;
}

int cmd_classify(const Options& opts) {
    const json cfg = load_config(opts);
    auto sys = build_system(cfg);
    set_initials(sys.get(), cfg, opts.seed);

    ratdiff_behavior behavior{};
    const auto st = ratdiff_classify(sys.get(), &behavior);
    if (st != RATDIFF_OK) die(exit_code_for(st), ratdiff_last_error());

    std::ostringstream line;
    if (behavior.is_periodic) {
        line << "verdict=Periodic stated=" << behavior.stated_period
             << " generic=" << behavior.generic_minimal_period
             << " rule=" << behavior.rule << "\n";
    } else {
        line << "verdict=Unbounded rule=" << behavior.rule << "\n";
    }
    write_output(opts, cfg, line.str());
    return kExitOk;
}

int cmd_verify(const Options& opts) {
    const json cfg = load_config(opts);
    auto sys = build_system(cfg);
    set_initials(sys.get(), cfg, opts.seed);

    if (!cfg.contains("form")) die(kExitDomain, "verify needs a 'form' config field");
    const std::string form = cfg.at("form").get<std::string>();
    const long iterations = config_long(cfg, "iterations", opts.iterations, 200);
    const long budget = config_long(cfg, "bit_budget", opts.bit_budget, 1L << 20);

    long first_mismatch = 0;
    const auto st = ratdiff_verify_closed_form(sys.get(), form.c_str(), iterations,
                                               budget, &first_mismatch);
    if (st == RATDIFF_OK) {
        write_output(opts, cfg, "match=true n_checked=" + std::to_string(iterations) + "\n");
        return kExitOk;
    }
    if (st == RATDIFF_ERR_MISMATCH) {
        write_output(opts, cfg,
                     "match=false first_mismatch=" + std::to_string(first_mismatch) + "\n");
        return kExitMismatch;
    }
    die(exit_code_for(st), ratdiff_last_error());
}

int cmd_sweep(const Options& opts, int k_max, int m_max, int seeds) {
    const json cfg = load_config(opts);
    const long budget = config_long(cfg, "bit_budget", opts.bit_budget, 1L << 16);

    char* csv = nullptr;
    const auto st = ratdiff_sweep_csv(k_max, m_max, seeds, budget, &csv);
    if (st != RATDIFF_OK) die(exit_code_for(st), ratdiff_last_error());
    write_output(opts, cfg, csv);
    ratdiff_string_free(csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulation and classification of two rational difference systems"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--config", opts.config_path, "JSON experiment config")->envname("RATDIFF_CONFIG");
    app.add_option("--seed", opts.seed, "seed for random positive initials");
    app.add_option("--iterations", opts.iterations, "steps past index 0");
    app.add_option("--bit-budget", opts.bit_budget, "max bits per numerator/denominator");
    app.add_option("--out", opts.out, "output file (default: stdout)");

    auto* simulate = app.add_subcommand("simulate", "iterate the system, emit orbit CSV");
    auto* classify = app.add_subcommand("classify", "report the predicted behavior");
    auto* verify = app.add_subcommand("verify", "check a closed form against simulation");
    auto* sweep = app.add_subcommand("sweep", "classifier-vs-detector grid, emit CSV");

    int k_max = 6, m_max = 6, seeds = 5;
    sweep->add_option("--k-max", k_max, "largest k (<= 8)");
    sweep->add_option("--m-max", m_max, "largest m (<= 8)");
    sweep->add_option("--seeds", seeds, "seeds per (k, m) cell");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(opts);
        if (classify->parsed()) return cmd_classify(opts);
        if (verify->parsed()) return cmd_verify(opts);
        if (sweep->parsed()) return cmd_sweep(opts, k_max, m_max, seeds);
    } catch (const std::exception& e) {
        die(kExitInternal, e.what());
    }
    return kExitInternal;
}
