// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruh/sweep.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"
#include "unruh/boson.hpp"
#include "unruh/error.hpp"
#include "unruh/fermion.hpp"
#include "unruh/linalg.hpp"

namespace unruh {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_size(std::size_t n) { return std::to_string(n); }

double gap(double a, double b) { return std::abs(a - b); }

VerifyPoint blank_point(double alpha, double r) {
  VerifyPoint p;
  p.alpha = alpha;
  p.r = r;
  return p;
}

void check_alphas(const std::vector<double>& alphas) {
  if (alphas.empty())
    throw Error(ErrorCode::InvalidArgument, "alpha list is empty");
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) {
      std::ostringstream os;
      os << "alpha must lie in [0, 1], got " << a;
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
  }
}

EntanglementReport evaluate_point(Field field, double alpha, double r,
                                  const TruncationPolicy& policy) {
  const InitialStateParam a(alpha);
  if (field == Field::Boson)
    return boson::evaluate(a, AccelParam::boson(r), policy);
  return fermion::evaluate(fermion::FermionState(a, AccelParam::fermion(r)));
}

VerifyPoint verify_boson_point(double alpha, double r,
                               const TruncationPolicy& policy) {
  VerifyPoint p = blank_point(alpha, r);
  const InitialStateParam a(alpha);
  const AccelParam accel = AccelParam::boson(r);
  const EntanglementReport analytic = boson::evaluate(a, accel, policy);
  p.n_max_used = analytic.n_max_used;
  p.trace_deficit = analytic.trace_deficit;

  const DensityMatrix rho = boson::build_rho_numeric(a, accel, policy);
  const double oracle_n = log_negativity(rho);
  const OracleEntropies e = oracle_entropies(rho);
  p.comparisons = {
      {"negativity", analytic.negativity, oracle_n,
       gap(analytic.negativity, oracle_n)},
      {"s_ab", analytic.s_ab, e.s_ab, gap(analytic.s_ab, e.s_ab)},
      {"s_b", analytic.s_b, e.s_b, gap(analytic.s_b, e.s_b)},
      {"s_a", analytic.s_a, e.s_a, gap(analytic.s_a, e.s_a)},
      {"mutual_information", analytic.mutual_information,
       e.mutual_information(),
       gap(analytic.mutual_information, e.mutual_information())},
  };
  return p;
}

VerifyPoint verify_fermion_point(double alpha, double r) {
  VerifyPoint p = blank_point(alpha, r);
  const fermion::FermionState state(alpha, r);
  p.n_max_used = 1;
  const DensityMatrix rho = fermion::build_rho(state);
  const SymMatrix pt = partial_transpose_a(rho);
  const double oracle_min = eigenvalues(pt).min();
  const double oracle_n = std::log2(trace_norm(pt));
  const OracleEntropies e = oracle_entropies(rho);

  const double lm = fermion::lambda_minus(state);
  const double n = fermion::negativity_closed(state);
  const double i = fermion::mutual_information_closed(state);
  const double sa = alice_entropy(state.alpha());
  p.comparisons = {
      {"negativity", n, oracle_n, gap(n, oracle_n)},
      {"lambda_minus", lm, oracle_min, gap(lm, oracle_min)},
      {"s_a", sa, e.s_a, gap(sa, e.s_a)},
      {"mutual_information", i, e.mutual_information(),
       gap(i, e.mutual_information())},
  };
  return p;
}

ordered_json row_json(const SweepRow& row) {
  ordered_json j;
  j["field"] = std::string(to_string(row.field));
  j["alpha"] = row.alpha;
  j["r"] = row.r;
  j["negativity"] = row.report.negativity;
  j["mutual_information"] = row.report.mutual_information;
  j["s_a"] = row.report.s_a;
  j["s_b"] = row.report.s_b;
  j["s_ab"] = row.report.s_ab;
  j["n_max_used"] = row.report.n_max_used;
  j["trace_deficit"] = row.report.trace_deficit;
  return j;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void SweepSpec::validate() const {
  check_alphas(alphas);
  policy.validate();
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_min >= 0.0) ||
      r_min > r_max)
    throw Error(ErrorCode::InvalidArgument,
                "r range must satisfy 0 <= r_min <= r_max");
  if (r_steps == 0)
    throw Error(ErrorCode::InvalidArgument, "r_steps must be >= 1");
  const double limit = field == Field::Fermion ? kFermionMaxR : kBosonSweepRMax;
  if (r_max > limit) {
    std::ostringstream os;
    os.precision(17);
    os << to_string(field) << " sweep needs r_max <= " << limit << ", got "
       << r_max;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

std::vector<double> SweepSpec::r_grid() const {
  std::vector<double> rs(r_steps + 1);
  const double span = r_max - r_min;
  for (std::size_t i = 0; i <= r_steps; ++i) {
    const double r = r_min + span * static_cast<double>(i) /
                                 static_cast<double>(r_steps);
    rs[i] = std::min(r, r_max);
  }
  rs.back() = r_max;
  return rs;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> rs = spec.r_grid();
  SweepResult out;
  out.rows.resize(spec.alphas.size() * rs.size());
  detail::parallel_for(out.rows.size(), [&](std::size_t k) {
    SweepRow& row = out.rows[k];
    row.field = spec.field;
    row.alpha = spec.alphas[k / rs.size()];
    row.r = rs[k % rs.size()];
    row.report = evaluate_point(spec.field, row.alpha, row.r, spec.policy);
  });
  for (const auto& row : out.rows)
    if (!row.report.truncation_ok) out.truncation_failed = true;
  return out;
}

std::string format_sweep(const std::vector<SweepRow>& rows, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) arr.push_back(row_json(row));
    return arr.dump(2) + "\n";
  }
  std::string s = kSweepCsvHeader;
  s += '\n';
  for (const auto& row : rows) {
    const auto& rep = row.report;
    s += to_string(row.field);
    for (double x : {row.alpha, row.r, rep.negativity, rep.mutual_information,
                     rep.s_a, rep.s_b, rep.s_ab}) {
      s += ',';
      s += format_double(x);
    }
    s += ',';
    s += format_size(rep.n_max_used);
    s += ',';
    s += format_double(rep.trace_deficit);
    s += '\n';
  }
  return s;
}

std::vector<double> default_verify_alphas(Field field) {
  if (field == Field::Boson)
    return {0.3, 0.6, std::numbers::sqrt2 / 2.0, 0.8, 0.95};
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.95};
}

std::vector<double> default_verify_rs(Field field) {
  if (field == Field::Boson) return {0.2, 0.6, 1.0, 1.4};
  std::vector<double> rs;
  for (int k = 0; k <= 8; ++k) rs.push_back(k * std::numbers::pi / 32.0);
  rs.back() = kFermionMaxR;
  return rs;
}

double default_verify_tolerance(Field field) {
  return field == Field::Boson ? 1e-6 : 1e-10;
}

VerifyReport run_verify(const VerifySpec& spec) {
  VerifyReport rep;
  rep.field = spec.field;
  rep.tolerance = spec.tolerance > 0.0 ? spec.tolerance
                                       : default_verify_tolerance(spec.field);
  const auto alphas =
      spec.alphas.empty() ? default_verify_alphas(spec.field) : spec.alphas;
  const auto rs = spec.rs.empty() ? default_verify_rs(spec.field) : spec.rs;
  check_alphas(alphas);
  spec.policy.validate();
  for (double r : rs) {
    if (spec.field == Field::Boson && !(r >= 0.0 && r <= kBosonOracleRMax)) {
      std::ostringstream os;
      os << "bosonic verification grid must stay within 0 <= r <= "
         << kBosonOracleRMax << ", got " << r;
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
    if (spec.field == Field::Fermion) AccelParam::fermion(r);
  }

  rep.points.resize(alphas.size() * rs.size());
  detail::parallel_for(rep.points.size(), [&](std::size_t k) {
    const double alpha = alphas[k / rs.size()];
    const double r = rs[k % rs.size()];
    VerifyPoint& p = rep.points[k];
    try {
      p = spec.field == Field::Boson
              ? verify_boson_point(alpha, r, spec.policy)
              : verify_fermion_point(alpha, r);
    } catch (const Error& e) {
      p = blank_point(alpha, r);
      p.error = e.what();
      if (const auto* te = dynamic_cast<const TruncationError*>(&e)) {
        p.trace_deficit = te->deficit();
        p.n_max_used = te->n_max();
      }
    }
    p.passed = p.error.empty() && p.trace_deficit <= rep.tolerance;
    for (const auto& c : p.comparisons)
      if (!(c.gap < rep.tolerance)) p.passed = false;
  });

  rep.passed = true;
  for (const auto& p : rep.points) {
    rep.passed = rep.passed && p.passed;
    rep.max_trace_deficit = std::max(rep.max_trace_deficit, p.trace_deficit);
    for (const auto& c : p.comparisons) {
      auto it = std::find_if(rep.max_gaps.begin(), rep.max_gaps.end(),
                             [&](const auto& g) { return g.first == c.quantity; });
      if (it == rep.max_gaps.end()) {
        rep.max_gaps.emplace_back(c.quantity, c.gap);
      } else {
        it->second = std::max(it->second, c.gap);
      }
    }
  }
  return rep;
}

std::string format_verify(const VerifyReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json j;
    j["field"] = std::string(to_string(report.field));
    j["tolerance"] = report.tolerance;
    j["passed"] = report.passed;
    j["max_trace_deficit"] = report.max_trace_deficit;
    ordered_json gaps = ordered_json::object();
    for (const auto& [name, g] : report.max_gaps) gaps[name] = g;
    j["max_gaps"] = gaps;
    ordered_json pts = ordered_json::array();
    for (const auto& p : report.points) {
      ordered_json pj;
      pj["alpha"] = p.alpha;
      pj["r"] = p.r;
      pj["n_max_used"] = p.n_max_used;
      pj["trace_deficit"] = p.trace_deficit;
      pj["passed"] = p.passed;
      if (!p.error.empty()) pj["error"] = p.error;
      ordered_json cs = ordered_json::array();
      for (const auto& c : p.comparisons) {
        cs.push_back({{"quantity", c.quantity},
                      {"analytic", c.analytic},
                      {"oracle", c.oracle},
                      {"gap", c.gap}});
      }
      pj["comparisons"] = cs;
      pts.push_back(pj);
    }
    j["points"] = pts;
    return j.dump(2) + "\n";
  }
  std::string s =
      "field,alpha,r,quantity,analytic,oracle,gap,n_max_used,trace_deficit,"
      "passed\n";
  auto prefix = [&](const VerifyPoint& p) {
    return std::string(to_string(report.field)) + ',' + format_double(p.alpha) +
           ',' + format_double(p.r) + ',';
  };
  auto suffix = [&](const VerifyPoint& p) {
    return ',' + format_size(p.n_max_used) + ',' +
           format_double(p.trace_deficit) + ',' + (p.passed ? "1" : "0") + '\n';
  };
  for (const auto& p : report.points) {
    if (!p.error.empty()) {
      s += prefix(p) + "error,,,";
      s += suffix(p);
      continue;
    }
    for (const auto& c : p.comparisons) {
      s += prefix(p) + c.quantity + ',' + format_double(c.analytic) + ',' +
           format_double(c.oracle) + ',' + format_double(c.gap);
      s += suffix(p);
    }
  }
  return s;
}

LimitRow run_limits(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "alpha must lie in [0, 1], got " << alpha;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  const InitialStateParam a(alpha);
  LimitRow row;
  row.alpha = alpha;
  row.fermion_limit_negativity = fermion::limit_negativity(a);
  row.i_initial = 2.0 * alice_entropy(a);
  row.i_final = fermion::mutual_information_closed(
      fermion::FermionState(a, AccelParam::fermion(kFermionMaxR)));
  row.halving_residual = std::abs(row.i_final - 0.5 * row.i_initial);
  return row;
}

std::vector<LimitRow> run_limits(const std::vector<double>& alphas) {
  check_alphas(alphas);
  std::vector<LimitRow> rows;
  rows.reserve(alphas.size());
  for (double a : alphas) rows.push_back(run_limits(a));
  return rows;
}

std::string format_limits(const std::vector<LimitRow>& rows,
                          OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["alpha"] = r.alpha;
      j["fermion_limit_negativity"] = r.fermion_limit_negativity;
      j["i_initial"] = r.i_initial;
      j["i_final"] = r.i_final;
      j["halving_residual"] = r.halving_residual;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::string s = kLimitsCsvHeader;
  s += '\n';
  for (const auto& r : rows) {
    s += format_double(r.alpha) + ',' +
         format_double(r.fermion_limit_negativity) + ',' +
         format_double(r.i_initial) + ',' + format_double(r.i_final) + ',' +
         format_double(r.halving_residual) + '\n';
  }
  return s;
}

std::string format_map_accel(Field field, double ratio, const AccelParam& r,
                             OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ordered_json j;
    j["field"] = std::string(to_string(field));
    j["ratio"] = ratio;
    // JSON has no infinity; a saturated r is reported as null.
    j["r"] = r.saturated() ? ordered_json(nullptr) : ordered_json(r.r());
    j["saturated"] = r.saturated();
    return j.dump(2) + "\n";
  }
  return std::string(kMapAccelCsvHeader) + '\n' +
         std::string(to_string(field)) + ',' + format_double(ratio) + ',' +
         format_double(r.r()) + ',' + (r.saturated() ? "1" : "0") + '\n';
}

}  // namespace unruh
