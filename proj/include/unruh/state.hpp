// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace unruh {

/// Amplitude alpha of the initial state and its normalized partner
/// sqrt(1 - alpha^2).
class InitialStateParam {
 public:
  /// Throws InvalidArgument unless |alpha| <= 1.
  explicit InitialStateParam(double alpha);

  double alpha() const noexcept { return alpha_; }
  double alpha_sq() const noexcept { return alpha_ * alpha_; }
  double partner() const noexcept { return partner_; }
  double partner_sq() const noexcept { return 1.0 - alpha_ * alpha_; }

 private:
  double alpha_;
  double partner_;
};

/// Controls where the bosonic Fock sum is cut. The cutoff is the smallest
/// n_max whose discarded mass is below tail_eps, but never above n_max_cap.
struct TruncationPolicy {
  double tail_eps = 1e-12;
  std::size_t n_max_cap = 5000;

  /// Throws InvalidArgument for a non-positive tolerance or a zero cap.
  void validate() const;
};

/// Everything measured at one (field, alpha, r) point.
struct EntanglementReport {
  double negativity = 0.0;
  double mutual_information = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  std::size_t n_max_used = 0;
  double trace_deficit = 0.0;
  bool truncation_ok = true;
};

/// Binary entropy of {alpha^2, 1 - alpha^2}: the inertial party's marginal.
double alice_entropy(const InitialStateParam& alpha);

}  // namespace unruh
