/*
 * ratdiff — exact simulation, classification and closed-form evaluation of
 * the rational difference systems
 *
 *   Sys. 1:  x_{n+1} = 1/y_{n-k},  y_{n+1} = x_{n-k}/y_{n-k}
 *   Sys. 2:  x_{n+1} = 1/y_{n-k},  y_{n+1} = y_{n-k}/(x_{n-m} y_{n-m})
 *
 * All arithmetic is exact arbitrary-precision rational; values cross this
 * API as canonical "p/q" strings (the "/q" part omitted when q = 1).
 *
 * Every fallible function returns a ratdiff_status; on failure
 * ratdiff_last_error() holds a human-readable message for the calling
 * thread. Handles are opaque and freed with their *_destroy function.
 */
#ifndef RATDIFF_H
#define RATDIFF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    RATDIFF_OK = 0,
    RATDIFF_ERR_INVALID = 1,  /* bad arguments or malformed input text */
    RATDIFF_ERR_DOMAIN = 2,   /* zero/nonpositive values, wrong shape, index out of range */
    RATDIFF_ERR_BUDGET = 3,   /* a numerator/denominator outgrew the bit budget */
    RATDIFF_ERR_MISMATCH = 4, /* closed form disagreed with simulation */
    RATDIFF_ERR_INTERNAL = 5
} ratdiff_status;

/* System specification plus (optionally) its initial conditions. */
typedef struct ratdiff_system ratdiff_system;
/* An exact trajectory {(x_n, y_n)} from index -nu onward. */
typedef struct ratdiff_orbit ratdiff_orbit;

/* Message for the most recent failing call on this thread. */
const char* ratdiff_last_error(void);

/* --- system construction ------------------------------------------------ */

ratdiff_status ratdiff_system_create_sys1(int k, ratdiff_system** out);
ratdiff_status ratdiff_system_create_sys2(int k, int m, ratdiff_system** out);
void ratdiff_system_destroy(ratdiff_system* sys);

/* Max delay: initial data occupy indices -nu..0 (nu+1 entries per sequence). */
int ratdiff_system_nu(const ratdiff_system* sys);

/* x and y are arrays of `count` = nu+1 fraction strings in increasing index
 * order (index -nu first). Entries must be nonzero. */
ratdiff_status ratdiff_system_set_initials(ratdiff_system* sys,
                                           const char* const* x,
                                           const char* const* y, size_t count);

/* Seeded generic positive initials: every entry p/q with p, q uniform in
 * [1, 1000], drawn from the documented linear-congruential generator. */
ratdiff_status ratdiff_system_set_random_initials(ratdiff_system* sys, uint64_t seed);

/* --- simulation ----------------------------------------------------------*/

/* Iterates n_steps steps past index 0. On RATDIFF_ERR_BUDGET *out still
 * receives the prefix computed before the overflow. */
ratdiff_status ratdiff_simulate(const ratdiff_system* sys, long n_steps,
                                long bit_budget, ratdiff_orbit** out);
void ratdiff_orbit_destroy(ratdiff_orbit* orbit);

long ratdiff_orbit_start_index(const ratdiff_orbit* orbit);
long ratdiff_orbit_last_index(const ratdiff_orbit* orbit);

/* Exact values at index n as freshly allocated strings; release both with
 * ratdiff_string_free. */
ratdiff_status ratdiff_orbit_value(const ratdiff_orbit* orbit, long n,
                                   char** x_out, char** y_out);

/* Whole orbit as CSV text `n,x_exact,y_exact,x_float,y_float`. */
ratdiff_status ratdiff_orbit_csv(const ratdiff_orbit* orbit, char** csv_out);

void ratdiff_string_free(char* s);

/* --- classification and root analysis ------------------------------------*/

typedef struct {
    int is_periodic;             /* 1 periodic, 0 unbounded */
    long stated_period;          /* published period formula; 0 when unbounded */
    long generic_minimal_period; /* minimal period for generic initials; 0 when unbounded */
    char rule[24];               /* clause tag, e.g. "T1", "S2_iiia" */
} ratdiff_behavior;

/* Requires all-positive initial conditions to be set. */
ratdiff_status ratdiff_classify(const ratdiff_system* sys, ratdiff_behavior* out);

/* 1/0 whether Sys. 2's characteristic polynomial has a repeated root;
 * -1 on invalid arguments. */
int ratdiff_has_repeated_root(int k, int m);

/* lcm of the characteristic root orders; 0 when a repeated root makes
 * generic solutions unbounded. */
ratdiff_status ratdiff_generic_period(const ratdiff_system* sys, long* period_out);

/* --- empirical detectors --------------------------------------------------*/

/* Smallest exact period p <= p_max of the orbit's state window, or 0 when
 * none; preperiod_out (nullable) receives the transient length. Requires
 * orbit length >= 3 * p_max. */
ratdiff_status ratdiff_minimal_period(const ratdiff_orbit* orbit, long p_max,
                                      long* period_out, long* preperiod_out);

/* Whether every stride subsequence of y is exactly geometric. */
ratdiff_status ratdiff_geometric_stride_check(const ratdiff_orbit* orbit,
                                              long stride, int* out);

/* Structural unboundedness certificate: geometric strides with some common
 * ratio != 1. */
ratdiff_status ratdiff_is_unbounded(const ratdiff_orbit* orbit, long stride, int* out);

long ratdiff_default_p_max(const ratdiff_system* sys);
long ratdiff_canonical_stride(const ratdiff_system* sys);

/* --- closed forms ----------------------------------------------------------*/

/* form is "s3" (m=0, k=2r+1), "s4" (m=1, k=3 mod 4) or "s5" (m=1, k=4k'+1).
 * Compares the explicit solution against simulation for 1 <= n <= n_max.
 * Returns RATDIFF_OK with *first_mismatch = 0 on agreement, or
 * RATDIFF_ERR_MISMATCH with the first disagreeing index. */
ratdiff_status ratdiff_verify_closed_form(const ratdiff_system* sys, const char* form,
                                          long n_max, long bit_budget,
                                          long* first_mismatch);

/* --- coverage grid ---------------------------------------------------------*/

/* Sys. 2 classifier-vs-detector grid over k in [1,k_max], m in [0,m_max],
 * seeds 1..n_seeds, as CSV text. */
ratdiff_status ratdiff_sweep_csv(int k_max, int m_max, int n_seeds,
                                 long bit_budget, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* RATDIFF_H */
