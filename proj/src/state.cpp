// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruh/state.hpp"

#include <cmath>
#include <sstream>

#include "unruh/error.hpp"
#include "unruh/summation.hpp"

namespace unruh {

InitialStateParam::InitialStateParam(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || std::abs(alpha) > 1.0) {
    std::ostringstream os;
    os << "initial-state amplitude must satisfy |alpha| <= 1, got " << alpha;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  partner_ = std::sqrt(1.0 - alpha * alpha);
}

void TruncationPolicy::validate() const {
  if (!(tail_eps > 0.0) || !std::isfinite(tail_eps))
    throw Error(ErrorCode::InvalidArgument, "tail_eps must be finite and > 0");
  if (n_max_cap == 0)
    throw Error(ErrorCode::InvalidArgument, "n_max_cap must be >= 1");
}

double alice_entropy(const InitialStateParam& alpha) {
  return entropy_term(alpha.alpha_sq()) + entropy_term(alpha.partner_sq());
}

}  // namespace unruh
