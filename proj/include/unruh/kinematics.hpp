// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <string_view>

namespace unruh {

enum class Field { Boson, Fermion };

std::string_view to_string(Field f) noexcept;

inline constexpr double kFermionMaxR = std::numbers::pi / 4.0;

/// Dimensionless mode frequency over acceleration: omega * c / a for the Dirac
/// field, |k| * c / a for the scalar field.
class FrequencyAccelRatio {
 public:
  /// Throws InvalidArgument unless ratio is finite and > 0.
  explicit FrequencyAccelRatio(double ratio);

  /// `frequency` in 1/s (or |k| in 1/m with c in m/s, both give 1/s after
  /// multiplying by c), `speed_of_light` in m/s, `acceleration` in m/s^2.
  static FrequencyAccelRatio from_physical(double frequency,
                                           double speed_of_light,
                                           double acceleration);

  double value() const noexcept { return ratio_; }

 private:
  double ratio_;
};

/// Acceleration parameter r. Bosons take r in [0, inf); fermions live on
/// [0, pi/4]. `saturated` marks an r that is effectively infinite.
class AccelParam {
 public:
  static AccelParam boson(double r);
  static AccelParam fermion(double r);
  static AccelParam boson_saturated();

  double r() const noexcept { return r_; }
  Field field() const noexcept { return field_; }
  bool saturated() const noexcept { return saturated_; }
  bool finite() const noexcept { return !saturated_; }

 private:
  AccelParam(double r, Field field, bool saturated)
      : r_(r), field_(field), saturated_(saturated) {}

  double r_;
  Field field_;
  bool saturated_;
};

/// cosh r = (1 - exp(-2 pi x))^{-1/2}, evaluated as tanh r = exp(-pi x).
/// Returns boson_saturated() once 2 pi x < 1e-300.
AccelParam boson_r(FrequencyAccelRatio ratio);

/// cos r = (1 + exp(-2 pi x))^{-1/2}, evaluated as tan r = exp(-pi x).
AccelParam fermion_r(FrequencyAccelRatio ratio);

AccelParam map_accel(Field field, FrequencyAccelRatio ratio);

}  // namespace unruh
