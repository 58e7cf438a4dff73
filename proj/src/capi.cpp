// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruh/unruh.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "unruh/boson.hpp"
#include "unruh/error.hpp"
#include "unruh/fermion.hpp"
#include "unruh/kinematics.hpp"
#include "unruh/linalg.hpp"
#include "unruh/sweep.hpp"

struct unruh_density_matrix {
  unruh::DensityMatrix rep;
};

struct unruh_sweep {
  unruh::SweepResult rep;
};

struct unruh_verify_report {
  unruh::VerifyReport rep;
};

namespace {

thread_local std::string last_error;

unruh_status to_status(unruh::ErrorCode code) {
  switch (code) {
    case unruh::ErrorCode::InvalidArgument:
      return UNRUH_ERR_INVALID_ARGUMENT;
    case unruh::ErrorCode::Domain:
      return UNRUH_ERR_DOMAIN;
    case unruh::ErrorCode::NoConvergence:
      return UNRUH_ERR_NO_CONVERGENCE;
    case unruh::ErrorCode::Truncation:
      return UNRUH_ERR_TRUNCATION;
    case unruh::ErrorCode::Unsupported:
      return UNRUH_ERR_UNSUPPORTED;
    case unruh::ErrorCode::InvalidSpectrum:
      return UNRUH_ERR_INVALID_SPECTRUM;
  }
  return UNRUH_ERR_INTERNAL;
}

unruh_status fail(unruh_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
unruh_status guarded(Fn&& fn) {
  try {
    fn();
    return UNRUH_OK;
  } catch (const unruh::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(UNRUH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(UNRUH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(UNRUH_ERR_INTERNAL, "unknown error");
  }
}

unruh_status null_argument(const char* name) {
  return fail(UNRUH_ERR_INVALID_ARGUMENT,
              std::string("null pointer argument: ") + name);
}

unruh::Field to_field(unruh_field f) {
  switch (f) {
    case UNRUH_BOSON:
      return unruh::Field::Boson;
    case UNRUH_FERMION:
      return unruh::Field::Fermion;
  }
  throw unruh::Error(unruh::ErrorCode::InvalidArgument, "unknown field");
}

unruh_field from_field(unruh::Field f) {
  return f == unruh::Field::Boson ? UNRUH_BOSON : UNRUH_FERMION;
}

unruh::OutputFormat to_format(unruh_format f) {
  switch (f) {
    case UNRUH_FORMAT_CSV:
      return unruh::OutputFormat::Csv;
    case UNRUH_FORMAT_JSON:
      return unruh::OutputFormat::Json;
  }
  throw unruh::Error(unruh::ErrorCode::InvalidArgument, "unknown format");
}

unruh::TruncationPolicy to_policy(const unruh_policy* p) {
  unruh::TruncationPolicy policy;
  if (p != nullptr) {
    policy.tail_eps = p->tail_eps;
    policy.n_max_cap = p->n_max_cap;
  }
  return policy;
}

unruh_report to_report(const unruh::EntanglementReport& r) {
  return {r.negativity,    r.mutual_information, r.s_a,
          r.s_b,           r.s_ab,               r.n_max_used,
          r.trace_deficit, r.truncation_ok ? 1 : 0};
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<double> to_vector(const double* xs, std::size_t n) {
  if (xs == nullptr || n == 0) return {};
  return {xs, xs + n};
}

}  // namespace

extern "C" {

const char* unruh_last_error(void) { return last_error.c_str(); }

const char* unruh_version(void) { return "0.1.0"; }

unruh_policy unruh_default_policy(void) {
  const unruh::TruncationPolicy p;
  return {p.tail_eps, p.n_max_cap};
}

void unruh_string_free(char* s) { std::free(s); }

unruh_status unruh_map_accel(unruh_field field, double ratio, double* r,
                             int* saturated) {
  if (r == nullptr) return null_argument("r");
  return guarded([&] {
    const auto accel =
        unruh::map_accel(to_field(field), unruh::FrequencyAccelRatio(ratio));
    *r = accel.r();
    if (saturated != nullptr) *saturated = accel.saturated() ? 1 : 0;
  });
}

unruh_status unruh_evaluate(unruh_field field, double alpha, double r,
                            const unruh_policy* policy, unruh_report* report) {
  if (report == nullptr) return null_argument("report");
  return guarded([&] {
    const unruh::InitialStateParam a(alpha);
    if (to_field(field) == unruh::Field::Boson) {
      *report = to_report(unruh::boson::evaluate(
          a, unruh::AccelParam::boson(r), to_policy(policy)));
    } else {
      *report = to_report(unruh::fermion::evaluate(
          unruh::fermion::FermionState(a, unruh::AccelParam::fermion(r))));
    }
  });
}

unruh_status unruh_boson_block_pt_eigs(double alpha, double r, size_t n,
                                       double* lambda_plus,
                                       double* lambda_minus) {
  if (lambda_plus == nullptr) return null_argument("lambda_plus");
  if (lambda_minus == nullptr) return null_argument("lambda_minus");
  return guarded([&] {
    const auto e = unruh::boson::block_pt_eigs(
        unruh::InitialStateParam(alpha), unruh::AccelParam::boson(r), n);
    *lambda_plus = e.lambda_plus;
    *lambda_minus = e.lambda_minus;
  });
}

unruh_status unruh_fermion_lambda_minus(double alpha, double r, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = unruh::fermion::lambda_minus(unruh::fermion::FermionState(alpha, r));
  });
}

unruh_status unruh_fermion_limit_negativity(double alpha, double* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = unruh::fermion::limit_negativity(unruh::InitialStateParam(alpha));
  });
}

void unruh_fermion_optimal_alpha(double* alpha, double* negativity) {
  const auto [a, n] = unruh::fermion::optimal_alpha();
  if (alpha != nullptr) *alpha = a;
  if (negativity != nullptr) *negativity = n;
}

unruh_status unruh_build_rho(unruh_field field, double alpha, double r,
                             int alternate, const unruh_policy* policy,
                             unruh_density_matrix** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const unruh::InitialStateParam a(alpha);
    std::optional<unruh::DensityMatrix> rho;
    if (to_field(field) == unruh::Field::Boson) {
      const auto accel = unruh::AccelParam::boson(r);
      rho = alternate ? unruh::boson::build_rho_alternate(a, accel,
                                                          to_policy(policy))
                      : unruh::boson::build_rho_numeric(a, accel,
                                                        to_policy(policy));
    } else {
      const unruh::fermion::FermionState state(a,
                                               unruh::AccelParam::fermion(r));
      rho = alternate ? unruh::fermion::build_rho_alternate(state)
                      : unruh::fermion::build_rho(state);
    }
    *out = new unruh_density_matrix{std::move(*rho)};
  });
}

void unruh_density_matrix_free(unruh_density_matrix* rho) { delete rho; }

size_t unruh_density_matrix_dim(const unruh_density_matrix* rho) {
  return rho == nullptr ? 0 : rho->rep.matrix().dim();
}

size_t unruh_density_matrix_dim_b(const unruh_density_matrix* rho) {
  return rho == nullptr ? 0 : rho->rep.basis().d_b;
}

double unruh_density_matrix_trace_deficit(const unruh_density_matrix* rho) {
  return rho == nullptr ? 0.0 : rho->rep.trace_deficit();
}

double unruh_density_matrix_element(const unruh_density_matrix* rho, size_t i,
                                    size_t j) {
  if (rho == nullptr) return 0.0;
  const auto& m = rho->rep.matrix();
  if (i >= m.dim() || j >= m.dim()) return 0.0;
  return m(i, j);
}

unruh_status unruh_density_matrix_log_negativity(
    const unruh_density_matrix* rho, double* out) {
  if (rho == nullptr) return null_argument("rho");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = unruh::log_negativity(rho->rep); });
}

unruh_status unruh_density_matrix_entropy(const unruh_density_matrix* rho,
                                          unruh_subsystem part, double* out) {
  if (rho == nullptr) return null_argument("rho");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    switch (part) {
      case UNRUH_SUBSYSTEM_A:
        *out = unruh::entropy(unruh::eigenvalues(
            unruh::partial_trace(rho->rep, unruh::Subsystem::A)));
        return;
      case UNRUH_SUBSYSTEM_B:
        *out = unruh::entropy(unruh::eigenvalues(
            unruh::partial_trace(rho->rep, unruh::Subsystem::B)));
        return;
      case UNRUH_SUBSYSTEM_AB:
        *out = unruh::entropy(unruh::eigenvalues(rho->rep.matrix()));
        return;
    }
    throw unruh::Error(unruh::ErrorCode::InvalidArgument, "unknown subsystem");
  });
}

unruh_status unruh_density_matrix_pt_spectrum(const unruh_density_matrix* rho,
                                              double* values, size_t capacity,
                                              size_t* count) {
  if (rho == nullptr) return null_argument("rho");
  if (values == nullptr && capacity > 0) return null_argument("values");
  return guarded([&] {
    const auto spec =
        unruh::eigenvalues(unruh::partial_transpose_a(rho->rep));
    const auto& v = spec.values();
    std::copy_n(v.begin(), std::min(capacity, v.size()), values);
    if (count != nullptr) *count = v.size();
  });
}

unruh_status unruh_run_sweep(const unruh_sweep_spec* spec, unruh_sweep** out) {
  if (spec == nullptr) return null_argument("spec");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    unruh::SweepSpec s;
    s.field = to_field(spec->field);
    s.alphas = to_vector(spec->alphas, spec->n_alphas);
    s.r_min = spec->r_min;
    s.r_max = spec->r_max;
    s.r_steps = spec->r_steps;
    s.policy = to_policy(&spec->policy);
    *out = new unruh_sweep{unruh::run_sweep(s)};
  });
}

void unruh_sweep_free(unruh_sweep* sweep) { delete sweep; }

size_t unruh_sweep_size(const unruh_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->rep.rows.size();
}

unruh_status unruh_sweep_row_at(const unruh_sweep* sweep, size_t i,
                                unruh_sweep_row* row) {
  if (sweep == nullptr) return null_argument("sweep");
  if (row == nullptr) return null_argument("row");
  if (i >= sweep->rep.rows.size())
    return fail(UNRUH_ERR_INVALID_ARGUMENT, "row index out of range");
  const auto& r = sweep->rep.rows[i];
  *row = {from_field(r.field), r.alpha, r.r, to_report(r.report)};
  return UNRUH_OK;
}

int unruh_sweep_truncation_failed(const unruh_sweep* sweep) {
  return sweep != nullptr && sweep->rep.truncation_failed ? 1 : 0;
}

unruh_status unruh_sweep_format(const unruh_sweep* sweep, unruh_format format,
                                char** text) {
  if (sweep == nullptr) return null_argument("sweep");
  if (text == nullptr) return null_argument("text");
  return guarded([&] {
    *text = copy_string(unruh::format_sweep(sweep->rep.rows, to_format(format)));
  });
}

unruh_status unruh_run_verify(const unruh_verify_spec* spec,
                              unruh_verify_report** out) {
  if (spec == nullptr) return null_argument("spec");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    unruh::VerifySpec s;
    s.field = to_field(spec->field);
    s.alphas = to_vector(spec->alphas, spec->n_alphas);
    s.rs = to_vector(spec->rs, spec->n_rs);
    s.policy = to_policy(&spec->policy);
    s.tolerance = spec->tolerance;
    *out = new unruh_verify_report{unruh::run_verify(s)};
  });
}

void unruh_verify_report_free(unruh_verify_report* report) { delete report; }

int unruh_verify_report_passed(const unruh_verify_report* report) {
  return report != nullptr && report->rep.passed ? 1 : 0;
}

double unruh_verify_report_max_gap(const unruh_verify_report* report) {
  double g = 0.0;
  if (report == nullptr) return g;
  for (const auto& [name, value] : report->rep.max_gaps) g = std::max(g, value);
  return g;
}

double unruh_verify_report_max_trace_deficit(
    const unruh_verify_report* report) {
  return report == nullptr ? 0.0 : report->rep.max_trace_deficit;
}

unruh_status unruh_verify_report_format(const unruh_verify_report* report,
                                        unruh_format format, char** text) {
  if (report == nullptr) return null_argument("report");
  if (text == nullptr) return null_argument("text");
  return guarded([&] {
    *text = copy_string(unruh::format_verify(report->rep, to_format(format)));
  });
}

unruh_status unruh_limits(double alpha, unruh_limit_row* row) {
  if (row == nullptr) return null_argument("row");
  return guarded([&] {
    const auto r = unruh::run_limits(alpha);
    *row = {r.alpha, r.fermion_limit_negativity, r.i_initial, r.i_final,
            r.halving_residual};
  });
}

unruh_status unruh_limits_format(const double* alphas, size_t n,
                                 unruh_format format, char** text) {
  if (text == nullptr) return null_argument("text");
  return guarded([&] {
    *text = copy_string(unruh::format_limits(
        unruh::run_limits(to_vector(alphas, n)), to_format(format)));
  });
}

unruh_status unruh_map_accel_format(unruh_field field, double ratio,
                                    unruh_format format, char** text) {
  if (text == nullptr) return null_argument("text");
  return guarded([&] {
    const auto f = to_field(field);
    const auto accel = unruh::map_accel(f, unruh::FrequencyAccelRatio(ratio));
    *text = copy_string(
        unruh::format_map_accel(f, ratio, accel, to_format(format)));
  });
}

}  // extern "C"
