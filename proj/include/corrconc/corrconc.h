/*
   Copyright 2026 The corrconc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CORRCONC_H
#define CORRCONC_H

/*
 * C interface to the corrconc library: exact moments and density of the
 * sample correlation coefficient under a bivariate Gaussian model, closed
 * form approximations, concentration bounds, coverage intervals and a
 * deterministic Monte Carlo engine.
 *
 * Every fallible call returns a corrconc_status and writes results through
 * out-pointers. On failure, corrconc_last_error() holds a message for the
 * calling thread. Handles are opaque and owned by the caller; release them
 * with the matching *_destroy function. A model handle may be shared
 * between threads for concurrent read-only calls.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(CORRCONC_BUILDING_LIBRARY)
#define CORRCONC_API __attribute__((visibility("default")))
#else
#define CORRCONC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum corrconc_status {
    CORRCONC_OK = 0,
    CORRCONC_E_INVALID_ARGUMENT = 1, /* null pointer or bad enum value */
    CORRCONC_E_DOMAIN = 2,
    CORRCONC_E_DEGENERATE = 3,       /* |rho| = 1 where a density is needed */
    CORRCONC_E_TRUNCATION = 4,       /* series hit max_terms */
    CORRCONC_E_QUADRATURE = 5,
    CORRCONC_E_INFEASIBLE = 6,       /* no t reaches the requested alpha */
    CORRCONC_E_UNDEFINED = 7,        /* correlation of zero-variance data */
    CORRCONC_E_INTERNAL = 8
} corrconc_status;

typedef enum corrconc_bound_kind {
    CORRCONC_BERNSTEIN = 0,
    CORRCONC_C0 = 1, /* conservative, divisor 8 */
    CORRCONC_C1 = 2, /* aggressive, divisor 4 */
    CORRCONC_C2 = 3  /* mega-aggressive, divisor 2 */
} corrconc_bound_kind;

typedef enum corrconc_size_convention {
    CORRCONC_SIZE_N = 0,
    CORRCONC_SIZE_N_MINUS_1 = 1
} corrconc_size_convention;

typedef enum corrconc_bernstein_form {
    CORRCONC_BERNSTEIN_STATEMENT = 0,
    CORRCONC_BERNSTEIN_PROOF = 1
} corrconc_bernstein_form;

typedef struct corrconc_model corrconc_model;
typedef struct corrconc_sim corrconc_sim;

typedef struct corrconc_moment {
    double value;
    int terms_used;
    double truncation_estimate;
} corrconc_moment;

typedef struct corrconc_var_bounds {
    double approx;
    double upper_conservative;
    double upper_aggressive;
} corrconc_var_bounds;

typedef struct corrconc_tail {
    double raw;
    double clamped;
    int degenerate;
} corrconc_tail;

typedef struct corrconc_interval {
    double lower; /* raw, before clipping to [-1, 1] */
    double upper;
    double half_width;
    double alpha;
    double level;
    corrconc_bound_kind kind;
    int clipped;
} corrconc_interval;

typedef struct corrconc_sim_summary {
    double mean_r;
    double sd_r; /* divisor reps - 1 */
    double m4_r;
    double coverage[3]; /* C0, C1, C2 */
    corrconc_interval intervals[3];
    int reps;
    uint64_t seed;
    int resampled;
} corrconc_sim_summary;

CORRCONC_API const char* corrconc_version(void);
CORRCONC_API const char* corrconc_status_name(corrconc_status status);
CORRCONC_API const char* corrconc_last_error(void);

/* Model handle: (rho, n) plus series and bound settings. */
CORRCONC_API corrconc_status corrconc_model_create(double rho, int n, corrconc_model** out);
CORRCONC_API void corrconc_model_destroy(corrconc_model* model);
CORRCONC_API corrconc_status corrconc_model_set_series(corrconc_model* model, double rel_tol,
                                                       int max_terms);
CORRCONC_API corrconc_status corrconc_model_set_bound_options(corrconc_model* model,
                                                              corrconc_size_convention size,
                                                              corrconc_bernstein_form form);
CORRCONC_API double corrconc_model_rho(const corrconc_model* model);
CORRCONC_API int corrconc_model_n(const corrconc_model* model);

/* Gamma numerics. */
CORRCONC_API corrconc_status corrconc_log_gamma(double z, double* out);
CORRCONC_API corrconc_status corrconc_log_gamma_ratio(double a, double b, double* out);
CORRCONC_API corrconc_status corrconc_kappa(double z, double* out);
CORRCONC_API corrconc_status corrconc_kappa_stirling(double z, double* out);

/* Exact distribution. On CORRCONC_E_TRUNCATION, corrconc_moment still
 * carries the partial value and term count. */
CORRCONC_API corrconc_status corrconc_density(const corrconc_model* model, double r, double* out);
CORRCONC_API corrconc_status corrconc_g_m(int m, int k, int n, double* out);
CORRCONC_API corrconc_status corrconc_moment_series(const corrconc_model* model, int m,
                                                    corrconc_moment* out);
CORRCONC_API corrconc_status corrconc_moment_quadrature(const corrconc_model* model, int m,
                                                        double* out);
CORRCONC_API corrconc_status corrconc_exact_variance(const corrconc_model* model, double* out);
CORRCONC_API corrconc_status corrconc_central_moment(const corrconc_model* model, int order,
                                                     double center, double* out);

/* Approximations. */
CORRCONC_API corrconc_status corrconc_mean_approx(const corrconc_model* model, double* out);
CORRCONC_API corrconc_status corrconc_var_approx(const corrconc_model* model, double* out);
CORRCONC_API corrconc_status corrconc_second_moment_approx(const corrconc_model* model,
                                                           double* out);
CORRCONC_API corrconc_status corrconc_variance_bounds(const corrconc_model* model,
                                                      corrconc_var_bounds* out);
CORRCONC_API corrconc_status corrconc_central_even_moment_bound(const corrconc_model* model,
                                                                int m, double* out);

/* Concentration bounds and coverage intervals. */
CORRCONC_API corrconc_status corrconc_tail_bound(const corrconc_model* model,
                                                 corrconc_bound_kind kind, double t,
                                                 corrconc_tail* out);
CORRCONC_API corrconc_status corrconc_coverage_interval(const corrconc_model* model,
                                                        corrconc_bound_kind kind, double alpha,
                                                        corrconc_interval* out);
CORRCONC_API corrconc_status corrconc_invert_tail_numeric(const corrconc_model* model,
                                                          corrconc_bound_kind kind, double alpha,
                                                          double* out);
CORRCONC_API corrconc_status corrconc_semi_telescopic_residual(const corrconc_model* model, int m,
                                                               double* out);

/* Monte Carlo. workers = 0 uses every hardware thread; output does not
 * depend on it. */
CORRCONC_API corrconc_status corrconc_sim_run(const corrconc_model* model, int reps,
                                              uint64_t seed, double alpha, unsigned workers,
                                              corrconc_sim** out);
CORRCONC_API void corrconc_sim_destroy(corrconc_sim* sim);
CORRCONC_API corrconc_status corrconc_sim_summary_get(const corrconc_sim* sim,
                                                      corrconc_sim_summary* out);
CORRCONC_API corrconc_status corrconc_sim_values(const corrconc_sim* sim, const double** values,
                                                 size_t* count);
CORRCONC_API corrconc_status corrconc_sample_correlation(const double* xs, const double* ys,
                                                         size_t count, double* out);
CORRCONC_API corrconc_status corrconc_coverage_rate(const double* values, size_t count,
                                                    const corrconc_interval* interval,
                                                    double* out);

#ifdef __cplusplus
}
#endif

#endif /* CORRCONC_H */
