// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line driver over the C API.
//
//   unruh sweep     --field fermion --alpha 0.3,0.7071 --r-steps 50
//   unruh verify    --field boson
//   unruh limits    --alpha 0.5,0.6078
//   unruh map-accel --field boson --ratio 0.159
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unruh/unruh.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

// Accepts plain numbers plus "pi", "pi/M", "K*pi", "K*pi/M" and "sqrt(X)" so
// r = pi/4 and alpha = 1/sqrt(2) can be typed exactly.
double parse_scalar(std::string text) {
  std::erase(text, ' ');
  if (text.starts_with("sqrt(") && text.ends_with(")"))
    return std::sqrt(parse_number(text.substr(5, text.size() - 6)));
  if (text.starts_with("1/sqrt(") && text.ends_with(")"))
    return std::sqrt(1.0 / parse_number(text.substr(7, text.size() - 8)));
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string::npos) return parse_number(text);
  double v = std::numbers::pi;
  const std::string head = text.substr(0, pi_pos);
  const std::string tail = text.substr(pi_pos + 2);
  if (!head.empty()) {
    if (!head.ends_with("*")) throw UsageError("cannot parse '" + text + "'");
    v = parse_number(head.substr(0, head.size() - 1)) * std::numbers::pi;
  }
  if (!tail.empty()) {
    if (!tail.starts_with("/")) throw UsageError("cannot parse '" + text + "'");
    v /= parse_number(tail.substr(1));
  }
  return v;
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_scalar(item));
  }
  return out;
}

const std::map<std::string, unruh_field> kFields{{"boson", UNRUH_BOSON},
                                                 {"fermion", UNRUH_FERMION}};
const std::map<std::string, unruh_format> kFormats{
    {"csv", UNRUH_FORMAT_CSV}, {"json", UNRUH_FORMAT_JSON}};

struct CommonOptions {
  unruh_field field = UNRUH_FERMION;
  std::string alphas;
  std::optional<std::string> r_min;
  std::optional<std::string> r_max;
  std::optional<std::size_t> r_steps;
  double tail_eps = 1e-12;
  std::size_t n_max_cap = 5000;
  std::string output;
  unruh_format format = UNRUH_FORMAT_CSV;

  unruh_policy policy() const { return {tail_eps, n_max_cap}; }
};

void add_field(CLI::App* cmd, CommonOptions& o, bool required) {
  auto* opt = cmd->add_option("--field", o.field, "boson or fermion")
                  ->transform(CLI::CheckedTransformer(kFields, CLI::ignore_case));
  if (required) opt->required();
}

void add_output(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--output", o.output, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void add_grid(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--r-min", o.r_min, "smallest r (accepts pi/4 style)");
  cmd->add_option("--r-max", o.r_max, "largest r (accepts pi/4 style)");
  cmd->add_option("--r-steps", o.r_steps, "number of r intervals");
  cmd->add_option("--tail-eps", o.tail_eps, "bosonic truncation tolerance")
      ->capture_default_str();
  cmd->add_option("--n-max-cap", o.n_max_cap, "hard cap on bosonic Fock cutoff")
      ->capture_default_str();
}

int status_exit_code(unruh_status s) {
  switch (s) {
    case UNRUH_OK:
      return kExitOk;
    case UNRUH_ERR_INVALID_ARGUMENT:
    case UNRUH_ERR_DOMAIN:
    case UNRUH_ERR_UNSUPPORTED:
      return kExitInvalidArgs;
    default:
      return kExitNumerical;
  }
}

struct CApiError {
  unruh_status status;
};

void check(unruh_status s) {
  if (s != UNRUH_OK) throw CApiError{s};
}

// Takes ownership of `text`.
void emit(char* text, const std::string& path) {
  const std::string s(text);
  unruh_string_free(text);
  if (path.empty()) {
    std::cout << s;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << s;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

int run_sweep(const CommonOptions& o) {
  const std::vector<double> alphas = parse_list(o.alphas);
  unruh_sweep_spec spec{};
  spec.field = o.field;
  spec.alphas = alphas.data();
  spec.n_alphas = alphas.size();
  spec.r_min = o.r_min ? parse_scalar(*o.r_min) : 0.0;
  spec.r_max = o.r_max ? parse_scalar(*o.r_max)
                       : (o.field == UNRUH_FERMION ? std::numbers::pi / 4 : 3.0);
  spec.r_steps = o.r_steps.value_or(50);
  spec.policy = o.policy();
  unruh_sweep* sweep = nullptr;
  check(unruh_run_sweep(&spec, &sweep));
  std::unique_ptr<unruh_sweep, decltype(&unruh_sweep_free)> guard(
      sweep, &unruh_sweep_free);
  char* text = nullptr;
  check(unruh_sweep_format(sweep, o.format, &text));
  emit(text, o.output);
  if (unruh_sweep_truncation_failed(sweep)) {
    std::cerr << "error: Fock truncation cap reached before tail tolerance "
                 "at one or more points (see trace_deficit)\n";
    return kExitNumerical;
  }
  return kExitOk;
}

std::vector<double> grid_from(const CommonOptions& o, double default_max) {
  if (!o.r_min && !o.r_max && !o.r_steps) return {};
  const double lo = o.r_min ? parse_scalar(*o.r_min) : 0.0;
  const double hi = o.r_max ? parse_scalar(*o.r_max) : default_max;
  const std::size_t steps = o.r_steps.value_or(4);
  if (steps == 0) throw UsageError("--r-steps must be >= 1");
  std::vector<double> rs;
  for (std::size_t i = 0; i <= steps; ++i)
    rs.push_back(std::min(hi, lo + (hi - lo) * static_cast<double>(i) /
                                      static_cast<double>(steps)));
  rs.back() = hi;
  return rs;
}

int run_verify(const CommonOptions& o, double tolerance) {
  const std::vector<double> alphas = parse_list(o.alphas);
  const std::vector<double> rs =
      grid_from(o, o.field == UNRUH_FERMION ? std::numbers::pi / 4 : 1.5);
  unruh_verify_spec spec{};
  spec.field = o.field;
  spec.alphas = alphas.empty() ? nullptr : alphas.data();
  spec.n_alphas = alphas.size();
  spec.rs = rs.empty() ? nullptr : rs.data();
  spec.n_rs = rs.size();
  spec.policy = o.policy();
  spec.tolerance = tolerance;
  unruh_verify_report* report = nullptr;
  check(unruh_run_verify(&spec, &report));
  std::unique_ptr<unruh_verify_report, decltype(&unruh_verify_report_free)>
      guard(report, &unruh_verify_report_free);
  char* text = nullptr;
  check(unruh_verify_report_format(report, o.format, &text));
  emit(text, o.output);
  const bool passed = unruh_verify_report_passed(report) != 0;
  std::fprintf(stderr, "verify: %s (max gap %.3g, max trace deficit %.3g)\n",
               passed ? "PASS" : "FAIL", unruh_verify_report_max_gap(report),
               unruh_verify_report_max_trace_deficit(report));
  return passed ? kExitOk : kExitVerifyFailed;
}

int run_limits(const CommonOptions& o) {
  const std::vector<double> alphas = parse_list(o.alphas);
  char* text = nullptr;
  check(unruh_limits_format(alphas.data(), alphas.size(), o.format, &text));
  emit(text, o.output);
  return kExitOk;
}

int run_map_accel(const CommonOptions& o, std::optional<double> ratio,
                  std::optional<double> frequency,
                  std::optional<double> accel, double c) {
  if (!ratio) {
    if (!frequency || !accel)
      throw UsageError("map-accel needs --ratio or both --frequency and --accel");
    ratio = *frequency * c / *accel;
  }
  char* text = nullptr;
  check(unruh_map_accel_format(o.field, *ratio, o.format, &text));
  emit(text, o.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement degradation of field modes seen by an "
               "accelerated observer"};
  app.require_subcommand(1);

  CommonOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "tabulate N, I and entropies over r");
  add_field(sweep, sweep_opts, true);
  sweep->add_option("--alpha", sweep_opts.alphas,
                    "comma-separated initial-state amplitudes")
      ->required();
  add_grid(sweep, sweep_opts);
  add_output(sweep, sweep_opts);

  CommonOptions verify_opts;
  double tolerance = 0.0;
  auto* verify =
      app.add_subcommand("verify", "check closed forms against the dense oracle");
  add_field(verify, verify_opts, true);
  verify->add_option("--alpha", verify_opts.alphas,
                     "comma-separated alphas (default grid if omitted)");
  add_grid(verify, verify_opts);
  verify->add_option("--tolerance", tolerance,
                     "largest accepted gap (default 1e-10 fermion, 1e-6 boson)");
  add_output(verify, verify_opts);

  CommonOptions limit_opts;
  limit_opts.alphas = "0.25,0.5,0.6077812620656623,0.7071067811865476,0.9";
  auto* limits = app.add_subcommand(
      "limits", "infinite-acceleration negativity and mutual information");
  limits->add_option("--alpha", limit_opts.alphas, "comma-separated alphas")
      ->capture_default_str();
  add_output(limits, limit_opts);

  CommonOptions map_opts;
  std::optional<double> ratio;
  std::optional<double> frequency;
  std::optional<double> accel;
  double c = 299792458.0;
  auto* map = app.add_subcommand(
      "map-accel", "acceleration parameter r for a frequency/acceleration ratio");
  add_field(map, map_opts, true);
  map->add_option("--ratio", ratio, "dimensionless omega*c/a (or |k|*c/a)");
  map->add_option("--frequency", frequency, "mode frequency omega (1/s)");
  map->add_option("--accel", accel, "proper acceleration a (m/s^2)");
  map->add_option("--c", c, "speed of light (m/s)")->capture_default_str();
  add_output(map, map_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidArgs;
  }

  try {
    if (*sweep) return run_sweep(sweep_opts);
    if (*verify) return run_verify(verify_opts, tolerance);
    if (*limits) return run_limits(limit_opts);
    if (*map) return run_map_accel(map_opts, ratio, frequency, accel, c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const CApiError& e) {
    std::cerr << "error: " << unruh_last_error() << "\n";
    return status_exit_code(e.status);
  }
  return kExitInvalidArgs;
}
