/* Copyright 2026 The unruh Authors
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UNRUH_UNRUH_H
#define UNRUH_UNRUH_H

/* C interface to the unruh library: entanglement of a field mode shared
 * between an inertial and a uniformly accelerated observer.
 *
 * Every fallible call returns an unruh_status. On failure a human-readable
 * message is available from unruh_last_error() on the same thread until the
 * next failing call. Objects are opaque and released with their _free
 * function; strings returned through char** are released with
 * unruh_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(UNRUH_BUILDING_LIBRARY)
#    define UNRUH_API __declspec(dllexport)
#  else
#    define UNRUH_API __declspec(dllimport)
#  endif
#else
#  define UNRUH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unruh_status {
  UNRUH_OK = 0,
  UNRUH_ERR_INVALID_ARGUMENT = 1,
  UNRUH_ERR_DOMAIN = 2,
  UNRUH_ERR_NO_CONVERGENCE = 3,
  UNRUH_ERR_TRUNCATION = 4,
  UNRUH_ERR_UNSUPPORTED = 5,
  UNRUH_ERR_INVALID_SPECTRUM = 6,
  UNRUH_ERR_INTERNAL = 7
} unruh_status;

typedef enum unruh_field { UNRUH_BOSON = 0, UNRUH_FERMION = 1 } unruh_field;

typedef enum unruh_format { UNRUH_FORMAT_CSV = 0, UNRUH_FORMAT_JSON = 1 } unruh_format;

typedef enum unruh_subsystem {
  UNRUH_SUBSYSTEM_A = 0,
  UNRUH_SUBSYSTEM_B = 1,
  UNRUH_SUBSYSTEM_AB = 2
} unruh_subsystem;

typedef struct unruh_policy {
  double tail_eps;
  size_t n_max_cap;
} unruh_policy;

typedef struct unruh_report {
  double negativity;
  double mutual_information;
  double s_a;
  double s_b;
  double s_ab;
  size_t n_max_used;
  double trace_deficit;
  int truncation_ok;
} unruh_report;

typedef struct unruh_sweep_row {
  unruh_field field;
  double alpha;
  double r;
  unruh_report report;
} unruh_sweep_row;

typedef struct unruh_sweep_spec {
  unruh_field field;
  const double* alphas;
  size_t n_alphas;
  double r_min;
  double r_max;
  size_t r_steps;
  unruh_policy policy;
} unruh_sweep_spec;

/* NULL/0-length alphas or rs select the field's default grid; a tolerance
 * <= 0 selects the field's default tolerance. */
typedef struct unruh_verify_spec {
  unruh_field field;
  const double* alphas;
  size_t n_alphas;
  const double* rs;
  size_t n_rs;
  unruh_policy policy;
  double tolerance;
} unruh_verify_spec;

typedef struct unruh_limit_row {
  double alpha;
  double fermion_limit_negativity;
  double i_initial;
  double i_final;
  double halving_residual;
} unruh_limit_row;

typedef struct unruh_density_matrix unruh_density_matrix;
typedef struct unruh_sweep unruh_sweep;
typedef struct unruh_verify_report unruh_verify_report;

UNRUH_API const char* unruh_last_error(void);
UNRUH_API const char* unruh_version(void);
UNRUH_API unruh_policy unruh_default_policy(void);
UNRUH_API void unruh_string_free(char* s);

/* Acceleration parameter r for a dimensionless frequency/acceleration ratio.
 * *saturated is set to 1 (and *r to +inf) when the bosonic r is effectively
 * infinite. */
UNRUH_API unruh_status unruh_map_accel(unruh_field field, double ratio,
                                       double* r, int* saturated);

/* All quantities at one point. policy may be NULL for the defaults. A
 * bosonic truncation failure is reported through report->truncation_ok. */
UNRUH_API unruh_status unruh_evaluate(unruh_field field, double alpha, double r,
                                      const unruh_policy* policy,
                                      unruh_report* report);

/* Block eigenvalues of the bosonic partial transpose. */
UNRUH_API unruh_status unruh_boson_block_pt_eigs(double alpha, double r,
                                                 size_t n, double* lambda_plus,
                                                 double* lambda_minus);

UNRUH_API unruh_status unruh_fermion_lambda_minus(double alpha, double r,
                                                  double* out);
UNRUH_API unruh_status unruh_fermion_limit_negativity(double alpha,
                                                      double* out);
UNRUH_API void unruh_fermion_optimal_alpha(double* alpha, double* negativity);

/* Dense state. alternate != 0 builds the state from
 * alpha|0>|0> + sqrt(1-alpha^2)|1>|1> instead. */
UNRUH_API unruh_status unruh_build_rho(unruh_field field, double alpha,
                                       double r, int alternate,
                                       const unruh_policy* policy,
                                       unruh_density_matrix** out);
UNRUH_API void unruh_density_matrix_free(unruh_density_matrix* rho);
UNRUH_API size_t unruh_density_matrix_dim(const unruh_density_matrix* rho);
UNRUH_API size_t unruh_density_matrix_dim_b(const unruh_density_matrix* rho);
UNRUH_API double unruh_density_matrix_trace_deficit(
    const unruh_density_matrix* rho);
UNRUH_API double unruh_density_matrix_element(const unruh_density_matrix* rho,
                                              size_t i, size_t j);
UNRUH_API unruh_status unruh_density_matrix_log_negativity(
    const unruh_density_matrix* rho, double* out);
UNRUH_API unruh_status unruh_density_matrix_entropy(
    const unruh_density_matrix* rho, unruh_subsystem part, double* out);
/* Writes up to capacity eigenvalues of the partial transpose, descending;
 * *count receives the full dimension. */
UNRUH_API unruh_status unruh_density_matrix_pt_spectrum(
    const unruh_density_matrix* rho, double* values, size_t capacity,
    size_t* count);

UNRUH_API unruh_status unruh_run_sweep(const unruh_sweep_spec* spec,
                                       unruh_sweep** out);
UNRUH_API void unruh_sweep_free(unruh_sweep* sweep);
UNRUH_API size_t unruh_sweep_size(const unruh_sweep* sweep);
UNRUH_API unruh_status unruh_sweep_row_at(const unruh_sweep* sweep, size_t i,
                                          unruh_sweep_row* row);
UNRUH_API int unruh_sweep_truncation_failed(const unruh_sweep* sweep);
UNRUH_API unruh_status unruh_sweep_format(const unruh_sweep* sweep,
                                          unruh_format format, char** text);

UNRUH_API unruh_status unruh_run_verify(const unruh_verify_spec* spec,
                                        unruh_verify_report** out);
UNRUH_API void unruh_verify_report_free(unruh_verify_report* report);
UNRUH_API int unruh_verify_report_passed(const unruh_verify_report* report);
/* Largest gap over all quantities and points. */
UNRUH_API double unruh_verify_report_max_gap(const unruh_verify_report* report);
UNRUH_API double unruh_verify_report_max_trace_deficit(
    const unruh_verify_report* report);
UNRUH_API unruh_status unruh_verify_report_format(
    const unruh_verify_report* report, unruh_format format, char** text);

UNRUH_API unruh_status unruh_limits(double alpha, unruh_limit_row* row);
UNRUH_API unruh_status unruh_limits_format(const double* alphas, size_t n,
                                           unruh_format format, char** text);

UNRUH_API unruh_status unruh_map_accel_format(unruh_field field, double ratio,
                                              unruh_format format,
                                              char** text);

#ifdef __cplusplus
}
#endif

#endif /* UNRUH_UNRUH_H */
