// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dirac-field mode in the single-mode approximation: the Minkowski vacuum is
// cos r |0>_I|0>_II + sin r |1>_I|1>_II and the excitation is |1>_I|0>_II, so
// after tracing region II the two-party state is an exact 4x4 matrix.

#include <utility>

#include "unruh/kinematics.hpp"
#include "unruh/linalg.hpp"
#include "unruh/state.hpp"

namespace unruh::fermion {

class FermionState {
 public:
  /// Throws Domain unless `r` is a fermionic parameter (r in [0, pi/4]).
  FermionState(InitialStateParam alpha, AccelParam r);
  FermionState(double alpha, double r);

  const InitialStateParam& alpha() const noexcept { return alpha_; }
  double r() const noexcept { return r_.r(); }

 private:
  InitialStateParam alpha_;
  AccelParam r_;
};

/// State of sqrt(1-alpha^2)|0>|1> + alpha|1>|0> in basis
/// {|00>, |01>, |10>, |11>}.
DensityMatrix build_rho(const FermionState& state);

/// State of alpha|0>|0> + sqrt(1-alpha^2)|1>|1>.
DensityMatrix build_rho_alternate(const FermionState& state);

/// Negative eigenvalue of the partial transpose.
double lambda_minus(const FermionState& state);

double negativity_closed(const FermionState& state);

/// Negativity at r = pi/4: log2(1 - alpha^2/2 + |alpha| sqrt(2 - 7 alpha^2/4)).
double limit_negativity(const InitialStateParam& alpha);

/// (alpha, limit negativity) at the maximum of limit_negativity over [0, 1]:
/// alpha = sqrt((4 - sqrt 2)/7), value = log2((5 + 4 sqrt 2)/7).
std::pair<double, double> optimal_alpha();

double mutual_information_closed(const FermionState& state);

/// Marginal and joint entropies by diagonalizing build_rho(state).
OracleEntropies entropies(const FermionState& state);

/// N and I from the closed forms; S_B and S_AB from the 4x4 state.
EntanglementReport evaluate(const FermionState& state);

}  // namespace unruh::fermion
