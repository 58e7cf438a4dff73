// Copyright 2026 The unruh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>

namespace unruh {

// Neumaier's variant of Kahan summation. Bosonic series add thousands of
// geometrically shrinking terms; the running compensation keeps the total
// within a couple of ulps of the exact sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept {
  CompensatedSum s;
  for (double x : xs) s += x;
  return s.value();
}

/// -p log2 p with 0 log 0 = 0.
inline double entropy_term(double p) noexcept {
  return p > 0.0 ? -p * std::log2(p) : 0.0;
}

}  // namespace unruh
