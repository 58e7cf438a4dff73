// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruh/fermion.hpp"

#include <cmath>

#include "unruh/error.hpp"
#include "unruh/summation.hpp"

namespace unruh::fermion {

namespace {

AccelParam require_fermion(const AccelParam& r) {
  if (r.field() != Field::Fermion)
    throw Error(ErrorCode::Domain, "fermionic model needs a fermionic r");
  return r;
}

// p log2 p, zero at p = 0.
double plogp(double p) { return -entropy_term(p); }

// sqrt(alpha^4 sin^4 r + 4 alpha^2 (1 - alpha^2) cos^2 r)
double pt_spread(const FermionState& s) {
  const double a2 = s.alpha().alpha_sq();
  const double sin2 = std::sin(s.r()) * std::sin(s.r());
  const double cos2 = std::cos(s.r()) * std::cos(s.r());
  return std::sqrt(a2 * a2 * sin2 * sin2 +
                   4.0 * a2 * s.alpha().partner_sq() * cos2);
}

}  // namespace

FermionState::FermionState(InitialStateParam alpha, AccelParam r)
    : alpha_(alpha), r_(require_fermion(r)) {}

FermionState::FermionState(double alpha, double r)
    : FermionState(InitialStateParam(alpha), AccelParam::fermion(r)) {}

DensityMatrix build_rho(const FermionState& state) {
  const double a = state.alpha().alpha();
  const double b = state.alpha().partner();
  const double c = std::cos(state.r());
  const double s = std::sin(state.r());
  const BipartiteBasis basis{2, 2};
  SymMatrix m(4);
  m.set(basis.index(0, 1), basis.index(0, 1), b * b);
  m.set(basis.index(0, 1), basis.index(1, 0), a * b * c);
  m.set(basis.index(1, 0), basis.index(1, 0), a * a * c * c);
  m.set(basis.index(1, 1), basis.index(1, 1), a * a * s * s);
  return DensityMatrix(std::move(m), basis);
}

DensityMatrix build_rho_alternate(const FermionState& state) {
  const double a = state.alpha().alpha();
  const double b = state.alpha().partner();
  const double c = std::cos(state.r());
  const double s = std::sin(state.r());
  const BipartiteBasis basis{2, 2};
  SymMatrix m(4);
  m.set(basis.index(0, 0), basis.index(0, 0), a * a * c * c);
  m.set(basis.index(0, 1), basis.index(0, 1), a * a * s * s);
  m.set(basis.index(1, 1), basis.index(1, 1), b * b);
  m.set(basis.index(0, 0), basis.index(1, 1), a * b * c);
  return DensityMatrix(std::move(m), basis);
}

double lambda_minus(const FermionState& state) {
  const double sin_r = std::sin(state.r());
  return 0.5 * (state.alpha().alpha_sq() * sin_r * sin_r - pt_spread(state));
}

double negativity_closed(const FermionState& state) {
  const double sin_r = std::sin(state.r());
  return std::log2(1.0 - state.alpha().alpha_sq() * sin_r * sin_r +
                   pt_spread(state));
}

double limit_negativity(const InitialStateParam& alpha) {
  const double a2 = alpha.alpha_sq();
  return std::log2(1.0 - 0.5 * a2 +
                   std::abs(alpha.alpha()) * std::sqrt(2.0 - 1.75 * a2));
}

std::pair<double, double> optimal_alpha() {
  const double root2 = std::sqrt(2.0);
  return {std::sqrt((4.0 - root2) / 7.0),
          std::log2((5.0 + 4.0 * root2) / 7.0)};
}

double mutual_information_closed(const FermionState& state) {
  const double a2 = state.alpha().alpha_sq();
  const double sin_r = std::sin(state.r());
  const double cos_r = std::cos(state.r());
  const double as = a2 * sin_r * sin_r;
  const double ac = a2 * cos_r * cos_r;
  CompensatedSum i;
  i += plogp(1.0 - as);
  i += plogp(as);
  i += -plogp(1.0 - ac);
  i += -plogp(ac);
  i += -plogp(a2);
  i += -plogp(state.alpha().partner_sq());
  return i.value();
}

OracleEntropies entropies(const FermionState& state) {
  return oracle_entropies(build_rho(state));
}

EntanglementReport evaluate(const FermionState& state) {
  const OracleEntropies e = entropies(state);
  EntanglementReport rep;
  rep.negativity = negativity_closed(state);
  rep.mutual_information = mutual_information_closed(state);
  rep.s_a = alice_entropy(state.alpha());
  rep.s_b = e.s_b;
  rep.s_ab = e.s_ab;
  rep.n_max_used = 1;
  rep.trace_deficit = 0.0;
  rep.truncation_ok = true;
  return rep;
}

}  // namespace unruh::fermion
