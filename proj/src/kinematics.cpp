// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruh/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "unruh/error.hpp"

namespace unruh {

namespace {

constexpr double kSaturationThreshold = 1e-300;

}  // namespace

std::string_view to_string(Field f) noexcept {
  return f == Field::Boson ? "boson" : "fermion";
}

FrequencyAccelRatio::FrequencyAccelRatio(double ratio) : ratio_(ratio) {
  if (!std::isfinite(ratio) || !(ratio > 0.0)) {
    std::ostringstream os;
    os << "frequency/acceleration ratio must be finite and > 0, got " << ratio;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

FrequencyAccelRatio FrequencyAccelRatio::from_physical(double frequency,
                                                       double speed_of_light,
                                                       double acceleration) {
  return FrequencyAccelRatio(frequency * speed_of_light / acceleration);
}

AccelParam AccelParam::boson(double r) {
  if (!std::isfinite(r) || !(r >= 0.0)) {
    std::ostringstream os;
    os << "bosonic acceleration parameter must be finite and >= 0, got " << r;
    throw Error(ErrorCode::Domain, os.str());
  }
  return AccelParam(r, Field::Boson, false);
}

AccelParam AccelParam::fermion(double r) {
  if (!(r >= 0.0 && r <= kFermionMaxR)) {
    std::ostringstream os;
    os.precision(17);
    os << "fermionic acceleration parameter must lie in [0, pi/4], got " << r;
    throw Error(ErrorCode::Domain, os.str());
  }
  return AccelParam(r, Field::Fermion, false);
}

AccelParam AccelParam::boson_saturated() {
  return AccelParam(std::numeric_limits<double>::infinity(), Field::Boson,
                    true);
}

AccelParam boson_r(FrequencyAccelRatio ratio) {
  const double x = ratio.value();
  if (2.0 * std::numbers::pi * x < kSaturationThreshold)
    return AccelParam::boson_saturated();
  // atanh(e) = 0.5 * log1p(2e / (1 - e)), with 1 - e taken from expm1 so
  // both the small-x and large-x ends keep full relative precision.
  const double e = std::exp(-std::numbers::pi * x);
  const double one_minus_e = -std::expm1(-std::numbers::pi * x);
  return AccelParam::boson(0.5 * std::log1p(2.0 * e / one_minus_e));
}

AccelParam fermion_r(FrequencyAccelRatio ratio) {
  const double r = std::atan(std::exp(-std::numbers::pi * ratio.value()));
  return AccelParam::fermion(std::min(r, kFermionMaxR));
}

AccelParam map_accel(Field field, FrequencyAccelRatio ratio) {
  return field == Field::Boson ? boson_r(ratio) : fermion_r(ratio);
}

}  // namespace unruh
