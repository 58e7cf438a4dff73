// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "unruh/error.hpp"
#include "unruh/summation.hpp"

namespace unruh {

namespace {


double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  CompensatedSum s;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * s.value());
}

}  // namespace

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "matrix dim must be >= 1");
}

SymMatrix SymMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorCode::InvalidArgument, "matrix rows must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        std::ostringstream os;
        os << "matrix is not symmetric at (" << i << ", " << j << ")";
        throw Error(ErrorCode::InvalidArgument, os.str());
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

void SymMatrix::add(std::size_t i, std::size_t j, double v) noexcept {
  data_[i * dim_ + j] += v;
  if (i != j) data_[j * dim_ + i] += v;
}

double SymMatrix::trace() const {
  CompensatedSum s;
  for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
  return s.value();
}

double SymMatrix::frobenius_norm() const {
  CompensatedSum s;
  for (double x : data_) s += x * x;
  return std::sqrt(s.value());
}

DensityMatrix::DensityMatrix(SymMatrix matrix, BipartiteBasis basis,
                             double trace_deficit)
    : matrix_(std::move(matrix)), basis_(basis), trace_deficit_(trace_deficit) {
  if (basis_.d_a == 0 || basis_.d_b == 0 || basis_.dim() != matrix_.dim())
    throw Error(ErrorCode::InvalidArgument,
                "bipartite basis does not match matrix dimension");
  if (!(trace_deficit_ >= 0.0) || !std::isfinite(trace_deficit_))
    throw Error(ErrorCode::InvalidArgument, "trace deficit must be >= 0");
  const double tr = matrix_.trace();
  if (std::abs(tr - (1.0 - trace_deficit_)) > 1e-9) {
    std::ostringstream os;
    os << "trace " << tr << " inconsistent with deficit " << trace_deficit_;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const { return compensated_sum(values_); }

Spectrum eigenvalues(const SymMatrix& m, double tol, int max_sweeps) {
  if (!(tol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "eigensolver tolerance must be > 0");
  if (max_sweeps < 1)
    throw Error(ErrorCode::InvalidArgument, "sweep budget must be >= 1");
  const std::size_t n = m.dim();
  std::vector<double> a(m.data().begin(), m.data().end());
  const double scale = m.frobenius_norm();

  int sweep = 0;
  double off = off_diagonal_norm(a, n);
  if (!std::isfinite(off) || !std::isfinite(scale)) throw ConvergenceError(off, 0);
  while (off >= tol * scale && off > 0.0) {
    if (sweep == max_sweeps) throw ConvergenceError(off, sweep);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          const double new_rp = arp - s * (arq + tau * arp);
          const double new_rq = arq + s * (arp - tau * arq);
          a[r * n + p] = new_rp;
          a[p * n + r] = new_rp;
          a[r * n + q] = new_rq;
          a[q * n + r] = new_rq;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i];
  return Spectrum(std::move(values));
}

SymMatrix partial_transpose_a(const SymMatrix& m, const BipartiteBasis& basis) {
  if (basis.dim() != m.dim())
    throw Error(ErrorCode::InvalidArgument,
                "bipartite basis does not match matrix dimension");
  SymMatrix out(m.dim());
  for (std::size_t a = 0; a < basis.d_a; ++a)
    for (std::size_t b = 0; b < basis.d_b; ++b)
      for (std::size_t a2 = 0; a2 < basis.d_a; ++a2)
        for (std::size_t b2 = 0; b2 < basis.d_b; ++b2)
          out.set(basis.index(a, b), basis.index(a2, b2),
                  m(basis.index(a2, b), basis.index(a, b2)));
  return out;
}

SymMatrix partial_transpose_a(const DensityMatrix& rho) {
  return partial_transpose_a(rho.matrix(), rho.basis());
}

SymMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const auto& m = rho.matrix();
  const auto& basis = rho.basis();
  if (keep == Subsystem::A) {
    SymMatrix out(basis.d_a);
    for (std::size_t a = 0; a < basis.d_a; ++a) {
      for (std::size_t a2 = a; a2 < basis.d_a; ++a2) {
        CompensatedSum s;
        for (std::size_t b = 0; b < basis.d_b; ++b)
          s += m(basis.index(a, b), basis.index(a2, b));
        out.set(a, a2, s.value());
      }
    }
    return out;
  }
  SymMatrix out(basis.d_b);
  for (std::size_t b = 0; b < basis.d_b; ++b) {
    for (std::size_t b2 = b; b2 < basis.d_b; ++b2) {
      CompensatedSum s;
      for (std::size_t a = 0; a < basis.d_a; ++a)
        s += m(basis.index(a, b), basis.index(a, b2));
      out.set(b, b2, s.value());
    }
  }
  return out;
}

double trace_norm(const SymMatrix& m, double tol) {
  CompensatedSum s;
  const Spectrum spec = eigenvalues(m, tol);
  for (double v : spec.values()) s += std::abs(v);
  return s.value();
}

double entropy(const Spectrum& s) {
  CompensatedSum h;
  for (double p : s.values()) {
    if (p < -kNegativeSlack) {
      std::ostringstream os;
      os << "spectrum has eigenvalue " << p << " below -" << kNegativeSlack;
      throw Error(ErrorCode::InvalidSpectrum, os.str());
    }
    h += entropy_term(p);
  }
  return std::max(0.0, h.value());
}

double log_negativity(const DensityMatrix& rho, double tol) {
  return std::log2(trace_norm(partial_transpose_a(rho), tol));
}

OracleEntropies oracle_entropies(const DensityMatrix& rho, double tol) {
  OracleEntropies e;
  e.s_ab = entropy(eigenvalues(rho.matrix(), tol));
  e.s_a = entropy(eigenvalues(partial_trace(rho, Subsystem::A), tol));
  e.s_b = entropy(eigenvalues(partial_trace(rho, Subsystem::B), tol));
  return e;
}

}  // namespace unruh
