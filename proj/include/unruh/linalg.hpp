// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dense real-symmetric linear algebra used as the brute-force reference for
// every closed-form result in the library. Nothing here knows about the block
// structure of the states it is handed.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace unruh {

inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr int kDefaultMaxSweeps = 100;
inline constexpr double kNegativeSlack = 1e-10;

/// Dense symmetric matrix, row-major. Writes go through set() which updates
/// both triangles, so the stored matrix is always exactly symmetric.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim);

  /// Throws InvalidArgument if `rows` is ragged, empty or not exactly
  /// symmetric.
  static SymMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * dim_ + j];
  }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v) noexcept;

  std::span<const double> data() const noexcept { return data_; }

  double trace() const;
  double frobenius_norm() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

/// Local dimensions of a two-party system. Composite index of |a>|b> is
/// a * d_b + b.
struct BipartiteBasis {
  std::size_t d_a = 2;
  std::size_t d_b = 2;

  std::size_t dim() const noexcept { return d_a * d_b; }
  std::size_t index(std::size_t a, std::size_t b) const noexcept {
    return a * d_b + b;
  }

  friend bool operator==(const BipartiteBasis&, const BipartiteBasis&) = default;
};

/// A (possibly truncated) two-party state. `trace_deficit` records the
/// probability mass dropped by truncation; the matrix is never renormalized.
class DensityMatrix {
 public:
  DensityMatrix(SymMatrix matrix, BipartiteBasis basis,
                double trace_deficit = 0.0);

  const SymMatrix& matrix() const noexcept { return matrix_; }
  const BipartiteBasis& basis() const noexcept { return basis_; }
  double trace_deficit() const noexcept { return trace_deficit_; }

 private:
  SymMatrix matrix_;
  BipartiteBasis basis_;
  double trace_deficit_;
};

/// Eigenvalues sorted in descending order.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double max() const { return values_.front(); }
  double min() const { return values_.back(); }
  double sum() const;

 private:
  std::vector<double> values_;
};

enum class Subsystem { A, B };

/// Cyclic Jacobi rotations until off(A) < tol * ||A||_F. Throws
/// ConvergenceError if the sweep budget runs out.
Spectrum eigenvalues(const SymMatrix& m, double tol = kDefaultEigenTol,
                     int max_sweeps = kDefaultMaxSweeps);

/// Transpose on the first party: out[(a,b),(a',b')] = in[(a',b),(a,b')].
SymMatrix partial_transpose_a(const SymMatrix& m, const BipartiteBasis& basis);
SymMatrix partial_transpose_a(const DensityMatrix& rho);

SymMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Sum of |eigenvalue|. Negative eigenvalues are kept as they are.
double trace_norm(const SymMatrix& m, double tol = kDefaultEigenTol);

/// Von Neumann entropy in bits. Values in [-kNegativeSlack, 0) are treated as
/// zero; anything more negative is an InvalidSpectrum error.
double entropy(const Spectrum& s);

double log_negativity(const DensityMatrix& rho, double tol = kDefaultEigenTol);

/// Entropies of the full state and both marginals, each from a fresh
/// diagonalization.
struct OracleEntropies {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double mutual_information() const noexcept { return s_a + s_b - s_ab; }
};
OracleEntropies oracle_entropies(const DensityMatrix& rho,
                                 double tol = kDefaultEigenTol);

}  // namespace unruh
