// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unruh {

enum class ErrorCode {
  InvalidArgument,
  Domain,
  NoConvergence,
  Truncation,
  Unsupported,
  InvalidSpectrum,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Eigensolver ran out of sweeps; carries the off-diagonal norm it reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(double residual, int sweeps);
  double residual() const noexcept { return residual_; }
  int sweeps() const noexcept { return sweeps_; }

 private:
  double residual_;
  int sweeps_;
};

/// Fock cutoff hit its cap before the discarded mass fell below tolerance.
class TruncationError : public Error {
 public:
  TruncationError(double deficit, double tolerance, std::size_t n_max);
  double deficit() const noexcept { return deficit_; }
  std::size_t n_max() const noexcept { return n_max_; }

 private:
  double deficit_;
  std::size_t n_max_;
};

}  // namespace unruh
