// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Test-only reference computations. None of these share code paths with the
// library: they use long double, brute-force sums or direct grid searches.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace unruh::testing {

/// Discarded mass beyond block n_max, summed term by term.
inline long double brute_tail(long double alpha, long double r,
                              std::size_t n_max) {
  const long double q = std::tanh(r) * std::tanh(r);
  const long double c2 = std::cosh(r) * std::cosh(r);
  const long double a2 = alpha * alpha;
  long double sum = 0.0L;
  for (std::size_t n = n_max + 1; n < n_max + 2000000; ++n) {
    const long double term = std::pow(q, static_cast<long double>(n)) / c2 *
                             (a2 + (1.0L - a2) * (n + 1) / c2);
    sum += term;
    if (term < 1e-30L * sum || term == 0.0L) break;
  }
  return sum;
}

/// Smallest N with brute_tail(N) < eps.
inline std::size_t brute_n_max(long double alpha, long double r,
                               long double eps) {
  std::size_t n = 0;
  while (brute_tail(alpha, r, n) >= eps) ++n;
  return n;
}

/// r from cosh r = (1 - exp(-2 pi x))^{-1/2}, direct inversion.
inline long double boson_r_direct(long double x) {
  const long double pi = std::numbers::pi_v<long double>;
  return std::acosh(1.0L / std::sqrt(1.0L - std::exp(-2.0L * pi * x)));
}

/// r from cos r = (1 + exp(-2 pi x))^{-1/2}, direct inversion.
inline long double fermion_r_direct(long double x) {
  const long double pi = std::numbers::pi_v<long double>;
  return std::acos(1.0L / std::sqrt(1.0L + std::exp(-2.0L * pi * x)));
}

/// Fermionic negativity at r = pi/4 straight from the 4x4 partial transpose:
/// trace norm = (1-a2) + a2/2 + |eigs of [[0, x], [x, a2/2]]|.
inline double fermion_limit_by_blocks(double alpha) {
  const double a2 = alpha * alpha;
  const double x = alpha * std::sqrt(1.0 - a2) * std::sqrt(0.5);
  const double d = 0.5 * a2;
  const double spread = std::sqrt(d * d + 4.0 * x * x);
  return std::log2((1.0 - a2) + d + spread);
}

/// argmax over an evenly spaced grid of `points` samples on [0, 1].
template <class Fn>
double grid_argmax(Fn&& f, std::size_t points) {
  double best_x = 0.0;
  double best = -1e300;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(points - 1);
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

/// Random real symmetric matrix with entries in [-1, 1].
inline std::vector<std::vector<double>> random_symmetric(std::size_t n,
                                                         std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = u(rng);
  return m;
}

/// Index of the element of `values` closest to x.
inline double nearest(const std::vector<double>& values, double x) {
  double best = values.front();
  for (double v : values)
    if (std::abs(v - x) < std::abs(best - x)) best = v;
  return best;
}

/// Frozen high-precision (40-digit) evaluations of the bosonic series,
/// summed to convergence: {alpha, r, N, I, S_B, S_AB}.
struct BosonReference {
  double alpha, r, negativity, mutual_information, s_b, s_ab;
};

inline const std::vector<BosonReference>& boson_references() {
  static const std::vector<BosonReference> refs = {
      {0.6, 1.0, 0.36500604720880154, 1.1791888664558277, 3.1252648693394585,
       2.888759192139123},
      {std::numbers::sqrt2 / 2, 1.0, 0.3686416839322744, 1.2295330447558912,
       3.0199017069528823, 2.7903686621969911},
      {0.6, 0.8, 0.48837715970223788, 1.2866160963848971, 2.6022725306372232,
       2.2583396235078183},
      {0.3, 1.0, 0.22601016609852151, 0.56987689035191321, 3.1774806585114507,
       3.0440735852236405},
      {0.6, 2.5, 0.023708345781222547, 0.95473213756439437, 7.3413110852624069,
       7.3292621369535048},
      {std::numbers::sqrt2 / 2, 3.0, 0.0084928310133567511, 1.0042651547972477,
       8.6708266118209609, 8.6665614570237132},
  };
  return refs;
}

}  // namespace unruh::testing
