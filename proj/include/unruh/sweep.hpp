// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Parameter sweeps, analytic-vs-dense verification and limit tables. These
// are the library-side halves of the CLI subcommands; formatting to CSV/JSON
// lives here too so the C API can hand finished text to callers.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "unruh/kinematics.hpp"
#include "unruh/state.hpp"

namespace unruh {

enum class OutputFormat { Csv, Json };

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

/// Largest bosonic r a sweep accepts.
inline constexpr double kBosonSweepRMax = 3.0;
/// Largest bosonic r the dense oracle is asked to handle.
inline constexpr double kBosonOracleRMax = 1.5;

struct SweepSpec {
  Field field = Field::Fermion;
  std::vector<double> alphas;
  double r_min = 0.0;
  double r_max = kFermionMaxR;
  /// Number of intervals; the grid has r_steps + 1 points including both ends.
  std::size_t r_steps = 50;
  TruncationPolicy policy;

  /// Throws InvalidArgument on an empty alpha list, alpha outside [0, 1],
  /// r_min > r_max, r_steps == 0 or r_max above the field's limit.
  void validate() const;
  std::vector<double> r_grid() const;
};

struct SweepRow {
  Field field = Field::Fermion;
  double alpha = 0.0;
  double r = 0.0;
  EntanglementReport report;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool truncation_failed = false;
};

/// Rows come out alpha-major, r ascending, regardless of how many worker
/// threads evaluated them.
SweepResult run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepCsvHeader =
    "field,alpha,r,negativity,mutual_information,s_a,s_b,s_ab,n_max_used,"
    "trace_deficit";

std::string format_sweep(const std::vector<SweepRow>& rows, OutputFormat fmt);

struct Comparison {
  std::string quantity;
  double analytic = 0.0;
  double oracle = 0.0;
  double gap = 0.0;
};

struct VerifyPoint {
  double alpha = 0.0;
  double r = 0.0;
  std::size_t n_max_used = 0;
  double trace_deficit = 0.0;
  std::vector<Comparison> comparisons;
  /// Non-empty when the oracle could not be evaluated (e.g. no convergence).
  std::string error;
  bool passed = false;
};

struct VerifySpec {
  Field field = Field::Fermion;
  /// Empty means the field's default grid.
  std::vector<double> alphas;
  std::vector<double> rs;
  TruncationPolicy policy;
  /// <= 0 means the field's default (1e-10 fermion, 1e-6 boson).
  double tolerance = 0.0;
};

struct VerifyReport {
  Field field = Field::Fermion;
  double tolerance = 0.0;
  std::vector<VerifyPoint> points;
  /// (quantity, largest gap over all points) in first-seen order.
  std::vector<std::pair<std::string, double>> max_gaps;
  double max_trace_deficit = 0.0;
  bool passed = false;
};

std::vector<double> default_verify_alphas(Field field);
std::vector<double> default_verify_rs(Field field);
double default_verify_tolerance(Field field);

/// Compares every closed-form/series quantity against the dense oracle on a
/// grid. A point passes when all gaps and its trace deficit are below the
/// tolerance. Throws InvalidArgument for a bosonic grid beyond
/// kBosonOracleRMax.
VerifyReport run_verify(const VerifySpec& spec);

std::string format_verify(const VerifyReport& report, OutputFormat fmt);

struct LimitRow {
  double alpha = 0.0;
  double fermion_limit_negativity = 0.0;
  double i_initial = 0.0;
  double i_final = 0.0;
  double halving_residual = 0.0;
};

/// Infinite-acceleration values: fermionic negativity at r = pi/4, initial
/// mutual information 2 S_A, fermionic final mutual information, and
/// |I_f - I_i / 2|.
LimitRow run_limits(double alpha);
std::vector<LimitRow> run_limits(const std::vector<double>& alphas);

inline constexpr const char* kLimitsCsvHeader =
    "alpha,fermion_limit_negativity,i_initial,i_final,halving_residual";

std::string format_limits(const std::vector<LimitRow>& rows, OutputFormat fmt);

inline constexpr const char* kMapAccelCsvHeader = "field,ratio,r,saturated";

std::string format_map_accel(Field field, double ratio, const AccelParam& r,
                             OutputFormat fmt);

}  // namespace unruh
