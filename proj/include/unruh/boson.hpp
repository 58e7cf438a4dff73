// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Scalar-field mode shared between an inertial party (A) and a uniformly
// accelerated party (B, Rindler region I). The Minkowski vacuum of B's mode
// is a two-mode squeezed state over regions I and II with weights
// tanh^n r / cosh r; region II is traced out, leaving an infinite Fock ladder
// that is cut at n_max with a closed-form bound on the discarded mass.
//
// Every r argument must be an AccelParam of bosonic kind; saturated
// (effectively infinite) r is rejected with ErrorCode::Unsupported.

#include <cstddef>

#include "unruh/kinematics.hpp"
#include "unruh/linalg.hpp"
#include "unruh/state.hpp"

namespace unruh::boson {

struct Truncation {
  std::size_t n_max = 0;
  /// Exact probability mass of the blocks n > n_max.
  double tail_mass = 0.0;
  bool cap_hit = false;
};

/// Mass of all blocks n > n_max, summed in closed form:
/// tanh^{2(N+1)} r * [alpha^2 + (1 - alpha^2)(1 + (N+1)/cosh^2 r)].
double tail_mass(const InitialStateParam& alpha, const AccelParam& r,
                 std::size_t n_max);

Truncation choose_n_max(const AccelParam& r, const InitialStateParam& alpha,
                        const TruncationPolicy& policy);

/// Reduced state of sqrt(1-alpha^2)|0>|1> + alpha|1>|0> on A x region I,
/// with d_B = n_max + 2. Throws TruncationError if the cap is hit before the
/// tail drops below policy.tail_eps.
DensityMatrix build_rho_numeric(const InitialStateParam& alpha,
                                const AccelParam& r,
                                const TruncationPolicy& policy = {});

/// Same construction for alpha|0>|0> + sqrt(1-alpha^2)|1>|1>.
DensityMatrix build_rho_alternate(const InitialStateParam& alpha,
                                  const AccelParam& r,
                                  const TruncationPolicy& policy = {});

/// Eigenvalues of the partial transpose restricted to the 2x2 block coupling
/// |0, n> and |1, n+1>.
struct BlockPTEigs {
  std::size_t n = 0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
};

BlockPTEigs block_pt_eigs(const InitialStateParam& alpha, const AccelParam& r,
                          std::size_t n);

double negativity_series(const InitialStateParam& alpha, const AccelParam& r,
                         const TruncationPolicy& policy = {});
double joint_entropy_series(const InitialStateParam& alpha,
                            const AccelParam& r,
                            const TruncationPolicy& policy = {});
double bob_entropy_series(const InitialStateParam& alpha, const AccelParam& r,
                          const TruncationPolicy& policy = {});
using unruh::alice_entropy;
double mutual_information(const InitialStateParam& alpha, const AccelParam& r,
                          const TruncationPolicy& policy = {});

/// All series at once. Never throws on truncation failure: the report carries
/// truncation_ok = false and the deficit reached at the cap instead.
EntanglementReport evaluate(const InitialStateParam& alpha,
                            const AccelParam& r,
                            const TruncationPolicy& policy = {});

}  // namespace unruh::boson
