#include "ratdiff.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "core/classify.hpp"
#include "core/closedform.hpp"
#include "core/csv.hpp"
#include "core/detect.hpp"
#include "core/random_init.hpp"
#include "core/simulate.hpp"
#include "core/sweep.hpp"

using namespace ratdiff;

struct ratdiff_system {
    SystemSpec spec;
    std::optional<InitialConditions> init;
};

struct ratdiff_orbit {
    Orbit orbit;
};

namespace {

thread_local std::string g_last_error;

ratdiff_status fail(ratdiff_status code, const std::string& what) {
    g_last_error = what;
    return code;
}

// Runs `fn` and folds the library's exception taxonomy onto status codes.
template <typename Fn>
ratdiff_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(RATDIFF_ERR_INVALID, e.what());
    } catch (const ZeroDenominator& e) {
        return fail(RATDIFF_ERR_INVALID, e.what());
    } catch (const BudgetExceeded& e) {
        return fail(RATDIFF_ERR_BUDGET, e.what());
    } catch (const DomainError& e) {
        return fail(RATDIFF_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(RATDIFF_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const InitialConditions& require_init(const ratdiff_system* sys) {
    if (!sys->init) throw DomainError("initial conditions have not been set");
    return *sys->init;
}

}  // namespace

extern "C" {

const char* ratdiff_last_error(void) { return g_last_error.c_str(); }

ratdiff_status ratdiff_system_create_sys1(int k, ratdiff_system** out) {
    if (!out) return fail(RATDIFF_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *out = new ratdiff_system{SystemSpec::sys1(k), std::nullopt};
        return RATDIFF_OK;
    });
}

ratdiff_status ratdiff_system_create_sys2(int k, int m, ratdiff_system** out) {
    if (!out) return fail(RATDIFF_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *out = new ratdiff_system{SystemSpec::sys2(k, m), std::nullopt};
        return RATDIFF_OK;
    });
}

void ratdiff_system_destroy(ratdiff_system* sys) { delete sys; }

int ratdiff_system_nu(const ratdiff_system* sys) { return sys ? sys->spec.nu() : -1; }

ratdiff_status ratdiff_system_set_initials(ratdiff_system* sys, const char* const* x,
                                           const char* const* y, size_t count) {
    if (!sys || !x || !y) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&] {
        std::vector<Rational> xs, ys;
        xs.reserve(count);
        ys.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            xs.push_back(Rational::from_string(x[i]));
            ys.push_back(Rational::from_string(y[i]));
        }
        sys->init.emplace(sys->spec, std::move(xs), std::move(ys));
        return RATDIFF_OK;
    });
}

ratdiff_status ratdiff_system_set_random_initials(ratdiff_system* sys, uint64_t seed) {
    if (!sys) return fail(RATDIFF_ERR_INVALID, "null system");
    return guarded([&] {
        sys->init.emplace(random_positive_initials(sys->spec, seed));
        return RATDIFF_OK;
    });
}

ratdiff_status ratdiff_simulate(const ratdiff_system* sys, long n_steps,
                                long bit_budget, ratdiff_orbit** out) {
    if (!sys || !out) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&]() -> ratdiff_status {
        auto result = iterate_partial(sys->spec, require_init(sys), n_steps, bit_budget);
        *out = new ratdiff_orbit{std::move(result.orbit)};
        if (result.status == SimulationStatus::BudgetExceeded)
            return fail(RATDIFF_ERR_BUDGET, "bit budget exceeded at index " +
                                                std::to_string(result.fail_index));
        return RATDIFF_OK;
    });
}

void ratdiff_orbit_destroy(ratdiff_orbit* orbit) { delete orbit; }

long ratdiff_orbit_start_index(const ratdiff_orbit* orbit) {
    return orbit->orbit.start_index();
}

long ratdiff_orbit_last_index(const ratdiff_orbit* orbit) {
    return orbit->orbit.last_index();
}

ratdiff_status ratdiff_orbit_value(const ratdiff_orbit* orbit, long n,
                                   char** x_out, char** y_out) {
    if (!orbit || !x_out || !y_out) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&] {
        const auto& [x, y] = orbit->orbit.at(n);
        *x_out = dup_string(x.str());
        *y_out = dup_string(y.str());
        return RATDIFF_OK;
    });
}

ratdiff_status ratdiff_orbit_csv(const ratdiff_orbit* orbit, char** csv_out) {
    if (!orbit || !csv_out) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&] {
        *csv_out = dup_string(orbit_to_csv(orbit->orbit));
        return RATDIFF_OK;
    });
}

void ratdiff_string_free(char* s) { std::free(s); }

ratdiff_status ratdiff_classify(const ratdiff_system* sys, ratdiff_behavior* out) {
    if (!sys || !out) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&] {
        const BehaviorClass bc = classify(sys->spec, require_init(sys));
        out->is_periodic = bc.verdict == Verdict::Periodic ? 1 : 0;
        out->stated_period = bc.stated_period;
        out->generic_minimal_period = bc.generic_minimal_period;
        std::snprintf(out->rule, sizeof out->rule, "%s", rule_name(bc.rule));
        return RATDIFF_OK;
    });
}

int ratdiff_has_repeated_root(int k, int m) {
    if (k < 1 || m < 0) return -1;
    return has_repeated_root(k, m) ? 1 : 0;
}

ratdiff_status ratdiff_generic_period(const ratdiff_system* sys, long* period_out) {
    if (!sys || !period_out) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&] {
        *period_out = generic_period(sys->spec).value_or(0);
        return RATDIFF_OK;
    });
}

ratdiff_status ratdiff_minimal_period(const ratdiff_orbit* orbit, long p_max,
                                      long* period_out, long* preperiod_out) {
    if (!orbit || !period_out) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&] {
        const PeriodReport report = minimal_period(orbit->orbit, p_max);
        *period_out = report.minimal_period.value_or(0);
        if (preperiod_out) *preperiod_out = report.preperiod;
        return RATDIFF_OK;
    });
}

ratdiff_status ratdiff_geometric_stride_check(const ratdiff_orbit* orbit,
                                              long stride, int* out) {
    if (!orbit || !out) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = geometric_stride_check(orbit->orbit, stride) ? 1 : 0;
        return RATDIFF_OK;
    });
}

ratdiff_status ratdiff_is_unbounded(const ratdiff_orbit* orbit, long stride, int* out) {
    if (!orbit || !out) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = is_unbounded_empirical(orbit->orbit, stride) ? 1 : 0;
        return RATDIFF_OK;
    });
}

long ratdiff_default_p_max(const ratdiff_system* sys) { return default_p_max(sys->spec); }

long ratdiff_canonical_stride(const ratdiff_system* sys) {
    return canonical_stride(sys->spec);
}

ratdiff_status ratdiff_verify_closed_form(const ratdiff_system* sys, const char* form,
                                          long n_max, long bit_budget,
                                          long* first_mismatch) {
    if (!sys || !form || !first_mismatch) return fail(RATDIFF_ERR_INVALID, "null argument");
    return guarded([&]() -> ratdiff_status {
        ClosedForm cf;
        const std::string name(form);
        if (name == "s3") cf = ClosedForm::S3;
        else if (name == "s4") cf = ClosedForm::S4;
        else if (name == "s5") cf = ClosedForm::S5;
        else return fail(RATDIFF_ERR_INVALID, "unknown closed form '" + name + "'");

        const auto mismatch =
            verify_closed_form(cf, sys->spec, require_init(sys), n_max, bit_budget);
        *first_mismatch = mismatch.value_or(0);
        if (mismatch)
            return fail(RATDIFF_ERR_MISMATCH,
                        "closed form disagrees with simulation at n = " +
                            std::to_string(*mismatch));
        return RATDIFF_OK;
    });
}

ratdiff_status ratdiff_sweep_csv(int k_max, int m_max, int n_seeds,
                                 long bit_budget, char** csv_out) {
    if (!csv_out) return fail(RATDIFF_ERR_INVALID, "null output pointer");
    return guarded([&] {
        *csv_out = dup_string(sweep_to_csv(run_sweep(k_max, m_max, n_seeds, bit_budget)));
        return RATDIFF_OK;
    });
}

}  // extern "C"
