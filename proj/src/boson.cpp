// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruh/boson.hpp"

#include <cmath>
#include <numbers>

#include "unruh/error.hpp"
#include "unruh/summation.hpp"

namespace unruh::boson {

namespace {

void require_finite_boson(const AccelParam& r) {
  if (r.field() != Field::Boson)
    throw Error(ErrorCode::Domain, "bosonic model needs a bosonic r");
  if (!r.finite())
    throw Error(ErrorCode::Unsupported,
                "effectively infinite r has no finite Fock representation; "
                "use the asymptotic limits instead");
}

// Populations and couplings of the reduced state, written without the
// 1/sinh^2 r that appears in the textbook form so r = 0 needs no special case.
// pow(0, 0) == 1 gives the vanishing-acceleration state directly.
class Ladder {
 public:
  Ladder(const InitialStateParam& alpha, const AccelParam& r)
      : a2_(alpha.alpha_sq()), b2_(alpha.partner_sq()) {
    const double c = std::cosh(r.r());
    const double t = std::tanh(r.r());
    q_ = t * t;
    c2_ = c * c;
    cross_ = alpha.alpha() * alpha.partner() / c;
  }

  // tanh^{2n} r / cosh^2 r
  double weight(std::size_t n) const { return std::pow(q_, n) / c2_; }

  // <1,n|rho|1,n>, from block n.
  double pop_excited_alice(std::size_t n) const { return a2_ * weight(n); }

  // <0,n|rho|0,n>, from block n-1.
  double pop_ground_alice(std::size_t n) const {
    if (n == 0) return 0.0;
    return b2_ * static_cast<double>(n) * std::pow(q_, n - 1) / (c2_ * c2_);
  }

  // <1,n|rho|0,n+1>
  double coupling(std::size_t n) const {
    return weight(n) * cross_ * std::sqrt(static_cast<double>(n + 1));
  }

  // Eigenvalue of the rank-1 block n.
  double joint_eigenvalue(std::size_t n) const {
    return pop_excited_alice(n) + pop_ground_alice(n + 1);
  }

  double bob_population(std::size_t n) const {
    return pop_excited_alice(n) + pop_ground_alice(n);
  }

  // Trace and discriminant of the partial-transpose block on
  // {|0,n>, |1,n+1>}: trace = w xi_n, disc = (w xi_n)^2 + 4 w^2 a^2 b^2 / c^2.
  double pt_block_trace(std::size_t n) const {
    return pop_ground_alice(n) + pop_excited_alice(n + 1);
  }
  double pt_block_det_magnitude(std::size_t n) const {
    const double w = weight(n);
    return w * w * a2_ * b2_ / c2_;
  }
  double pt_block_spread(std::size_t n) const {
    const double tr = pt_block_trace(n);
    return std::sqrt(tr * tr + 4.0 * pt_block_det_magnitude(n));
  }


  // lambda+ * lambda- = -det magnitude; dividing avoids the cancellation in
  // (trace - spread) / 2 once the block is dominated by its diagonal.
  double pt_block_negative(std::size_t n) const {
    const double plus = 0.5 * (pt_block_trace(n) + pt_block_spread(n));
    return plus > 0.0 ? -pt_block_det_magnitude(n) / plus : 0.0;
  }

 private:
  double a2_;
  double b2_;
  double q_ = 0.0;
  double c2_ = 1.0;
  double cross_ = 0.0;
};

Truncation checked_truncation(const InitialStateParam& alpha,
                              const AccelParam& r,
                              const TruncationPolicy& policy) {
  Truncation t = choose_n_max(r, alpha, policy);
  if (t.cap_hit && !(t.tail_mass < policy.tail_eps))
    throw TruncationError(t.tail_mass, policy.tail_eps, t.n_max);
  return t;
}

struct Branch {
  double amplitude;
  std::size_t alice;
};

// rho = sum_m |v_m><v_m| where region II sits in |m> and
//   v_m = vac.amplitude * tanh^m r / cosh r |vac.alice, m>
//       + exc.amplitude * tanh^m r sqrt(m+1) / cosh^2 r |exc.alice, m+1>.
DensityMatrix build_from_branches(Branch vacuum, Branch excited,
                                  const InitialStateParam& alpha,
                                  const AccelParam& r,
                                  const TruncationPolicy& policy) {
  require_finite_boson(r);
  policy.validate();
  const Truncation trunc = checked_truncation(alpha, r, policy);
  const BipartiteBasis basis{2, trunc.n_max + 2};
  SymMatrix m(basis.dim());
  const double t = std::tanh(r.r());
  const double c = std::cosh(r.r());
  for (std::size_t n = 0; n <= trunc.n_max; ++n) {
    const double tn = std::pow(t, n);
    const double u = vacuum.amplitude * tn / c;
    const double v = excited.amplitude * tn *
                     std::sqrt(static_cast<double>(n + 1)) / (c * c);
    const std::size_t iu = basis.index(vacuum.alice, n);
    const std::size_t iv = basis.index(excited.alice, n + 1);
    m.add(iu, iu, u * u);
    m.add(iu, iv, u * v);
    m.add(iv, iv, v * v);
  }
  return DensityMatrix(std::move(m), basis, trunc.tail_mass);
}

struct Series {
  double negativity = 0.0;
  double s_ab = 0.0;
  double s_b = 0.0;
};

Series sum_series(const InitialStateParam& alpha, const AccelParam& r,
                  std::size_t n_max) {
  const Ladder ladder(alpha, r);
  CompensatedSum negative;
  CompensatedSum s_ab;
  CompensatedSum s_b;
  for (std::size_t n = 0; n <= n_max; ++n) {
    s_ab += entropy_term(ladder.joint_eigenvalue(n));
  }
  // Block n+1 of the partial transpose and Bob's level n+1 still carry
  // population from block n of the state, so both run one step further.
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    negative += ladder.pt_block_negative(n);
    s_b += entropy_term(ladder.bob_population(n));
  }
  // The partial transpose has unit trace, so ||rho^T_A||_1 = 1 + 2 sum|lambda-|.
  // Summing only the negative part keeps the truncated tail out of the norm.
  return {std::log1p(-2.0 * negative.value()) / std::numbers::ln2,
          s_ab.value(), s_b.value()};
}

Series checked_series(const InitialStateParam& alpha, const AccelParam& r,
                      const TruncationPolicy& policy) {
  require_finite_boson(r);
  policy.validate();
  return sum_series(alpha, r, checked_truncation(alpha, r, policy).n_max);
}

}  // namespace

double tail_mass(const InitialStateParam& alpha, const AccelParam& r,
                 std::size_t n_max) {
  require_finite_boson(r);
  const double t = std::tanh(r.r());
  const double c = std::cosh(r.r());
  const double next = static_cast<double>(n_max) + 1.0;
  return std::pow(t * t, next) *
         (alpha.alpha_sq() + alpha.partner_sq() * (1.0 + next / (c * c)));
}

Truncation choose_n_max(const AccelParam& r, const InitialStateParam& alpha,
                        const TruncationPolicy& policy) {
  require_finite_boson(r);
  policy.validate();
  for (std::size_t n = 0; n < policy.n_max_cap; ++n) {
    const double tail = tail_mass(alpha, r, n);
    if (tail < policy.tail_eps) return {n, tail, false};
  }
  const double tail = tail_mass(alpha, r, policy.n_max_cap);
  return {policy.n_max_cap, tail, !(tail < policy.tail_eps)};
}

DensityMatrix build_rho_numeric(const InitialStateParam& alpha,
                                const AccelParam& r,
                                const TruncationPolicy& policy) {
  return build_from_branches({alpha.alpha(), 1}, {alpha.partner(), 0}, alpha,
                             r, policy);
}

DensityMatrix build_rho_alternate(const InitialStateParam& alpha,
                                  const AccelParam& r,
                                  const TruncationPolicy& policy) {
  return build_from_branches({alpha.alpha(), 0}, {alpha.partner(), 1}, alpha,
                             r, policy);
}

BlockPTEigs block_pt_eigs(const InitialStateParam& alpha, const AccelParam& r,
                          std::size_t n) {
  require_finite_boson(r);
  const Ladder ladder(alpha, r);
  const double plus =
      0.5 * (ladder.pt_block_trace(n) + ladder.pt_block_spread(n));
  return {n, plus, ladder.pt_block_negative(n)};
}

double negativity_series(const InitialStateParam& alpha, const AccelParam& r,
                         const TruncationPolicy& policy) {
  return checked_series(alpha, r, policy).negativity;
}

double joint_entropy_series(const InitialStateParam& alpha,
                            const AccelParam& r,
                            const TruncationPolicy& policy) {
  return checked_series(alpha, r, policy).s_ab;
}

double bob_entropy_series(const InitialStateParam& alpha, const AccelParam& r,
                          const TruncationPolicy& policy) {
  return checked_series(alpha, r, policy).s_b;
}

double mutual_information(const InitialStateParam& alpha, const AccelParam& r,
                          const TruncationPolicy& policy) {
  const Series s = checked_series(alpha, r, policy);
  return alice_entropy(alpha) + s.s_b - s.s_ab;
}

EntanglementReport evaluate(const InitialStateParam& alpha,
                            const AccelParam& r,
                            const TruncationPolicy& policy) {
  require_finite_boson(r);
  policy.validate();
  const Truncation trunc = choose_n_max(r, alpha, policy);
  const Series s = sum_series(alpha, r, trunc.n_max);
  EntanglementReport rep;
  rep.negativity = s.negativity;
  rep.s_a = alice_entropy(alpha);
  rep.s_b = s.s_b;
  rep.s_ab = s.s_ab;
  rep.mutual_information = rep.s_a + rep.s_b - rep.s_ab;
  rep.n_max_used = trunc.n_max;
  rep.trace_deficit = trunc.tail_mass;
  rep.truncation_ok = trunc.tail_mass < policy.tail_eps;
  return rep;
}

}  // namespace unruh::boson
