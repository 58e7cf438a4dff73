// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruh/error.hpp"

#include <sstream>

namespace unruh {

namespace {

std::string convergence_message(double residual, int sweeps) {
  std::ostringstream os;
  os << "eigensolver did not converge after " << sweeps
     << " sweeps (off-diagonal norm " << residual << ")";
  return os.str();
}

std::string truncation_message(double deficit, double tolerance,
                               std::size_t n_max) {
  std::ostringstream os;
  os << "Fock cutoff capped at n_max = " << n_max << " with trace deficit "
     << deficit << " above tolerance " << tolerance;
  return os.str();
}

}  // namespace

ConvergenceError::ConvergenceError(double residual, int sweeps)
    : Error(ErrorCode::NoConvergence, convergence_message(residual, sweeps)),
      residual_(residual),
      sweeps_(sweeps) {}

TruncationError::TruncationError(double deficit, double tolerance,
                                 std::size_t n_max)
    : Error(ErrorCode::Truncation,
            truncation_message(deficit, tolerance, n_max)),
      deficit_(deficit),
      n_max_(n_max) {}

}  // namespace unruh
