// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero on any FAIL
// not marked as known unattainable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "unruh/boson.hpp"
#include "unruh/fermion.hpp"
#include "unruh/kinematics.hpp"
#include "unruh/linalg.hpp"
#include "unruh/state.hpp"
#include "unruh/sweep.hpp"

using namespace unruh;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kInvSqrt2 = 0.7071067811865476;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_ms;  // <= 0 means no runtime requirement
  std::function<Outcome()> check;
  // Contradicted by another criterion; still reported, not counted in the exit code.
  bool known_unattainable = false;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double initial_mi(double alpha) { return 2.0 * alice_entropy(InitialStateParam(alpha)); }

double vanishing_accel_negativity(double alpha) {
  return std::log2(1.0 + 2.0 * std::abs(alpha) * std::sqrt(1.0 - alpha * alpha));
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

// Sweep rows grouped per alpha, in grid order.
std::vector<std::vector<SweepRow>> per_alpha(const SweepResult& res, std::size_t n_alpha) {
  std::vector<std::vector<SweepRow>> out(n_alpha);
  const std::size_t per = res.rows.size() / n_alpha;
  for (std::size_t i = 0; i < res.rows.size(); ++i) out[i / per].push_back(res.rows[i]);
  return out;
}

SweepResult sweep(Field field, std::vector<double> alphas, double r_max, std::size_t steps,
                  TruncationPolicy policy = {}) {
  SweepSpec s;
  s.field = field;
  s.alphas = std::move(alphas);
  s.r_min = 0.0;
  s.r_max = r_max;
  s.r_steps = steps;
  s.policy = policy;
  return run_sweep(s);
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// Largest relative difference over numeric cells; +inf on a shape or text mismatch.
double fixture_gap(const std::string& produced, const std::string& name) {
  const auto want = read_csv(std::filesystem::path(UNRUH_FIXTURE_DIR) / name);
  const auto tmp = std::filesystem::temp_directory_path() / ("acceptance_" + name);
  std::ofstream(tmp) << produced;
  const auto got = read_csv(tmp);
  std::filesystem::remove(tmp);
  if (want.empty() || got.size() != want.size() || got.front() != want.front())
    return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 1; i < want.size(); ++i) {
    if (got[i].size() != want[i].size()) return INFINITY;
    for (std::size_t j = 0; j < want[i].size(); ++j) {
      if (j == 0) {
        if (got[i][j] != want[i][j]) return INFINITY;
        continue;
      }
      const double w = std::stod(want[i][j]);
      const double g = std::stod(got[i][j]);
      worst = std::max(worst, std::abs(g - w) / std::max(1.0, std::abs(w)));
    }
  }
  return worst;
}

Outcome fermion_max_entangled_limit() {
  const double n = fermion::negativity_closed(fermion::FermionState(kInvSqrt2, kQuarterPi));
  const double exact = std::abs(n - std::log2(1.5));
  const double rounded = std::abs(n - 0.585);
  return {exact < 1e-12 && rounded < 5e-4,
          fmt("N = %.16g, |N - log2(3/2)| = %.2e, |N - 0.585| = %.2e", n, exact, rounded)};
}

Outcome fermion_optimum() {
  const auto [alpha, value] = fermion::optimal_alpha();
  const double alpha_ref = std::sqrt((4.0 - std::sqrt(2.0)) / 7.0);
  const double value_ref = std::log2((5.0 + 4.0 * std::sqrt(2.0)) / 7.0);
  constexpr int kGrid = 10000;
  double best_alpha = 0.0;
  double best = -INFINITY;
  for (int i = 0; i <= kGrid; ++i) {
    const double a = static_cast<double>(i) / kGrid;
    const double v = fermion::limit_negativity(InitialStateParam(a));
    if (v > best) {
      best = v;
      best_alpha = a;
    }
  }
  const bool ok = std::abs(alpha - alpha_ref) < 1e-12 && std::abs(value - value_ref) < 1e-12 &&
                  std::abs(value - 0.606) < 1e-3 &&
                  std::abs(best_alpha - alpha) <= 1.0 / kGrid && best <= value;
  return {ok, fmt("alpha* = %.16g, N* = %.16g, grid argmax = %.4f", alpha, value, best_alpha)};
}

Outcome fermion_halving() {
  double worst = 0.0;
  for (int k = 1; k <= 19; ++k) {
    const double a = 0.05 * k;
    const double i0 = fermion::mutual_information_closed(fermion::FermionState(a, 0.0));
    const double i1 = fermion::mutual_information_closed(fermion::FermionState(a, kQuarterPi));
    worst = std::max(worst, std::abs(i1 - 0.5 * i0));
  }
  return {worst < 1e-10, fmt("max |I(pi/4) - I(0)/2| = %.2e", worst)};
}

Outcome boson_halving() {
  TruncationPolicy policy;
  policy.tail_eps = 1e-10;
  const std::vector<double> rs{1.0, 1.5, 2.0, 2.5, 3.0};
  Outcome out;
  std::string detail;
  for (double a : {0.3, kInvSqrt2, 0.9}) {
    std::vector<double> residuals;
    for (double r : rs) {
      const double i = boson::mutual_information(InitialStateParam(a), AccelParam::boson(r), policy);
      residuals.push_back(std::abs(i - 0.5 * initial_mi(a)));
    }
    out.ok = out.ok && strictly_decreasing(residuals) && residuals.back() < 0.05;
    if (!detail.empty()) detail += "; ";
    detail += fmt("alpha %.4g: %.4f -> %.4f", a, residuals.front(), residuals.back());
  }
  out.detail = "residual at r = 1 -> 3, " + detail;
  return out;
}

Outcome vanishing_acceleration() {
  double worst = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double a = static_cast<double>(k) / 20.0;
    const double expected = vanishing_accel_negativity(a);
    const double nb = boson::negativity_series(InitialStateParam(a), AccelParam::boson(0.0));
    const double nf = fermion::negativity_closed(fermion::FermionState(a, 0.0));
    worst = std::max({worst, std::abs(nb - expected), std::abs(nf - expected)});
  }
  return {worst < 1e-10, fmt("max deviation over 20 alphas, both fields = %.2e", worst)};
}

Outcome oracle_equivalence(Field field) {
  VerifySpec spec;
  spec.field = field;
  spec.alphas = default_verify_alphas(field);
  spec.rs = default_verify_rs(field);
  spec.tolerance = default_verify_tolerance(field);
  const VerifyReport rep = run_verify(spec);
  std::string detail = fmt("%g points, tol %.0e:", static_cast<double>(rep.points.size()),
                           rep.tolerance);
  for (const auto& [q, gap] : rep.max_gaps) detail += " " + q + fmt(" %.1e", gap);
  return {rep.passed, detail};
}

Outcome trajectory_splitting() {
  auto boson_ni = [](double a, double r) {
    const auto rep = boson::evaluate(InitialStateParam(a), AccelParam::boson(r));
    return std::pair{rep.negativity, rep.mutual_information};
  };
  auto fermion_ni = [](double a, double r) {
    const auto rep = fermion::evaluate(fermion::FermionState(a, r));
    return std::pair{rep.negativity, rep.mutual_information};
  };
  double max_r0 = 0.0;
  // Smallest partner split per (field, quantity): boson N, boson I, fermion N, fermion I.
  double split[4] = {INFINITY, INFINITY, INFINITY, INFINITY};
  double fermion_mid_split = INFINITY;
  for (double a : {0.3, 0.5}) {
    const double p = InitialStateParam(a).partner();
    for (int field = 0; field < 2; ++field) {
      const auto eval = field == 0 ? std::function(boson_ni) : std::function(fermion_ni);
      const double r_far = field == 0 ? 1.0 : kQuarterPi;
      const auto [n0a, i0a] = eval(a, 0.0);
      const auto [n0p, i0p] = eval(p, 0.0);
      const auto [n1a, i1a] = eval(a, r_far);
      const auto [n1p, i1p] = eval(p, r_far);
      max_r0 = std::max({max_r0, std::abs(n0a - n0p), std::abs(i0a - i0p)});
      split[2 * field] = std::min(split[2 * field], std::abs(n1a - n1p));
      split[2 * field + 1] = std::min(split[2 * field + 1], std::abs(i1a - i1p));
    }
    fermion_mid_split = std::min(
        fermion_mid_split,
        std::abs(fermion_ni(a, kQuarterPi / 2).second - fermion_ni(p, kQuarterPi / 2).second));
  }
  // 1/sqrt(2) is its own partner.
  double degenerate = 0.0;
  const double self = InitialStateParam(kInvSqrt2).partner();
  for (int k = 0; k <= 10; ++k) {
    const auto [nb, ib] = boson_ni(kInvSqrt2, 0.2 * k);
    const auto [nbp, ibp] = boson_ni(self, 0.2 * k);
    const auto [nf, i_f] = fermion_ni(kInvSqrt2, kQuarterPi * k / 10.0);
    const auto [nfp, ifp] = fermion_ni(self, kQuarterPi * k / 10.0);
    degenerate = std::max({degenerate, std::abs(nb - nbp), std::abs(ib - ibp),
                           std::abs(nf - nfp), std::abs(i_f - ifp)});
  }
  Outcome out;
  out.ok = max_r0 < 1e-10 && degenerate < 1e-14 &&
           std::all_of(std::begin(split), std::end(split), [](double g) { return g > 1e-3; });
  out.detail = fmt("r = 0 gap %.1e, self-partner gap %.1e; min split boson N %.3g", max_r0,
                   degenerate, split[0]) +
               fmt(", boson I %.3g, fermion N %.3g", split[1], split[2]) +
               fmt(", fermion I %.1e at pi/4 (%.3g at pi/8)", split[3], fermion_mid_split);
  if (!out.ok && split[3] <= 1e-3)
    out.detail +=
        "; I(a, pi/4) = I(a, 0)/2 = H(a^2) is symmetric under a <-> sqrt(1-a^2), "
        "so fermionic partner I cannot split at pi/4";
  return out;
}

double spectrum_gap(const DensityMatrix& x, const DensityMatrix& y) {
  const Spectrum sx = eigenvalues(partial_transpose_a(x));
  const Spectrum sy = eigenvalues(partial_transpose_a(y));
  if (sx.size() != sy.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < sx.size(); ++i)
    worst = std::max(worst, std::abs(sx.values()[i] - sy.values()[i]));
  return worst;
}

Outcome alternate_state() {
  double fermion_gap = 0.0;
  for (double a : {0.1, 0.3, 0.6, kInvSqrt2, 0.9})
    for (int k = 0; k <= 8; ++k) {
      const fermion::FermionState st(a, kQuarterPi * k / 8.0);
      fermion_gap = std::max(fermion_gap, spectrum_gap(fermion::build_rho(st),
                                                       fermion::build_rho_alternate(st)));
    }
  double boson_gap = 0.0;
  for (double a : {0.3, 0.6, kInvSqrt2, 0.9})
    for (double r : {0.0, 0.5, 1.0, 1.5}) {
      const InitialStateParam alpha(a);
      const AccelParam accel = AccelParam::boson(r);
      boson_gap = std::max(boson_gap, spectrum_gap(boson::build_rho_numeric(alpha, accel),
                                                   boson::build_rho_alternate(alpha, accel)));
    }
  return {fermion_gap < 1e-10 && boson_gap < 1e-8,
          fmt("max PT spectrum gap: fermion %.1e, boson %.1e", fermion_gap, boson_gap)};
}

Outcome monotonic_degradation() {
  const std::vector<double> alphas{0.3, kInvSqrt2, 0.9};
  Outcome out;
  std::size_t curves = 0;
  for (Field field : {Field::Boson, Field::Fermion}) {
    const double r_max = field == Field::Boson ? 2.5 : kQuarterPi;
    const auto res = sweep(field, alphas, r_max, 49);
    out.ok = out.ok && !res.truncation_failed;
    for (const auto& rows : per_alpha(res, alphas.size())) {
      std::vector<double> n;
      std::vector<double> i;
      for (const auto& row : rows) {
        n.push_back(row.report.negativity);
        i.push_back(row.report.mutual_information);
      }
      out.ok = out.ok && rows.size() == 50 && strictly_decreasing(n) && strictly_decreasing(i);
      curves += 2;
    }
  }
  out.detail = fmt("%g curves of 50 points strictly decreasing", static_cast<double>(curves));
  return out;
}

Outcome boson_far_acceleration() {
  const double n3 = boson::negativity_series(InitialStateParam(kInvSqrt2), AccelParam::boson(3.0));
  const auto res = sweep(Field::Boson, {kInvSqrt2}, 3.0, 49);
  std::vector<double> n;
  for (const auto& row : res.rows) n.push_back(row.report.negativity);
  return {n3 < 0.05 && strictly_decreasing(n) && !res.truncation_failed,
          fmt("N(1/sqrt2, 3) = %.6g, decreasing on [0, 3]; r = inf limit is asymptotic only",
              n3)};
}

Outcome curve_families() {
  const std::vector<double> alphas{0.3, 0.5, 0.6077812620656623, kInvSqrt2, 0.9};
  Outcome out;
  double gold = 0.0;
  double fermion_floor = INFINITY;
  double boson_ceiling = 0.0;
  for (Field field : {Field::Boson, Field::Fermion}) {
    const bool boson = field == Field::Boson;
    const auto res = sweep(field, alphas, boson ? 3.0 : kQuarterPi, 30);
    const auto curves = per_alpha(res, alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i)
      for (std::size_t j = 0; j < alphas.size(); ++j) {
        const bool want = vanishing_accel_negativity(alphas[i]) <
                          vanishing_accel_negativity(alphas[j]);
        const bool got = curves[i].front().report.negativity <
                         curves[j].front().report.negativity;
        out.ok = out.ok && want == got;
      }
    for (const auto& c : curves) {
      const double end = c.back().report.negativity;
      if (boson)
        boson_ceiling = std::max(boson_ceiling, end / c.front().report.negativity);
      else
        fermion_floor = std::min(fermion_floor, end);
    }
    gold = std::max(gold, fixture_gap(format_sweep(res.rows, OutputFormat::Csv),
                                      boson ? "boson_sweep.csv" : "fermion_sweep.csv"));
  }
  gold = std::max(gold, fixture_gap(format_limits(run_limits(std::vector<double>{
                                                      0.25, 0.5, 0.6077812620656623,
                                                      kInvSqrt2, 0.9}),
                                                  OutputFormat::Csv),
                                    "limits.csv"));
  out.ok = out.ok && fermion_floor > 0.3 && boson_ceiling < 0.02 && gold < 1e-12;
  out.detail = fmt("fermion N(pi/4) >= %.3f, boson N(3)/N(0) <= %.4f, golden gap %.1e",
                   fermion_floor, boson_ceiling, gold);
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fermionic maximally-entangled limit", 1.0, fermion_max_entangled_limit},
      {2, "fermionic optimum", 100.0, fermion_optimum},
      {3, "fermionic halving law", 10.0, fermion_halving},
      {4, "bosonic asymptotic halving law", 30000.0, boson_halving},
      {5, "vanishing-acceleration formula", 1000.0, vanishing_acceleration},
      {6, "bosonic oracle equivalence", 120000.0, [] { return oracle_equivalence(Field::Boson); }},
      {7, "fermionic oracle equivalence", 1000.0, [] { return oracle_equivalence(Field::Fermion); }},
      {8, "partner trajectory splitting", 0.0, trajectory_splitting, true},
      {9, "alternate initial state", 0.0, alternate_state},
      {10, "monotonic degradation", 0.0, monotonic_degradation},
      {11, "bosonic large-acceleration decay", 0.0, boson_far_acceleration},
      {12, "curve families and golden data", 0.0, curve_families},
  };

  int failures = 0;
  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = c.budget_ms <= 0.0 || ms < c.budget_ms;
    const bool pass = out.ok && in_budget;
    if (!pass) {
      ++failures;
      if (!c.known_unattainable) ++unexpected;
    }
    std::printf("[%s] %2d %s: %s (%.3f ms%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), ms,
                in_budget ? "" : fmt(", budget %.0f ms exceeded", c.budget_ms).c_str());
  }
  std::printf("%d/%zu criteria passed, %d unexpected failure(s)\n",
              static_cast<int>(criteria.size()) - failures, criteria.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
