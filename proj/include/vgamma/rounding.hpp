// Copyright 2026 The vgamma Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VGAMMA_ROUNDING_HPP
#define VGAMMA_ROUNDING_HPP

#include <cmath>
#include <limits>

// Directed bounds without touching the FPU rounding mode. With round to
// nearest, the exact result of a single floating operation lies strictly
// between the predecessor and successor of the computed value, so one
// nextafter step in the wanted direction gives a valid one-sided bound.
// This also covers gradual underflow (succ(0) is the smallest subnormal)
// and keeps every routine here thread-safe.

namespace vgamma::rnd {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kUnit = 0x1p-53;  // unit roundoff for binary64
inline constexpr double kEta = std::numeric_limits<double>::denorm_min();

inline double succ(double x) { return std::nextafter(x, kInf); }
inline double pred(double x) { return std::nextafter(x, -kInf); }

// Zero operands make the operation exact; skipping the nextafter step there
// keeps zero radii exactly zero through accumulations.
inline double add_up(double a, double b) {
  if (a == 0.0) return b;
  if (b == 0.0) return a;
  return succ(a + b);
}
inline double add_down(double a, double b) {
  if (a == 0.0) return b;
  if (b == 0.0) return a;
  return pred(a + b);
}
inline double sub_up(double a, double b) { return b == 0.0 ? a : succ(a - b); }
inline double sub_down(double a, double b) { return b == 0.0 ? a : pred(a - b); }
inline double mul_up(double a, double b) {
  if ((a == 0.0 && std::isfinite(b)) || (b == 0.0 && std::isfinite(a))) return 0.0;
  return succ(a * b);
}
inline double mul_down(double a, double b) {
  if ((a == 0.0 && std::isfinite(b)) || (b == 0.0 && std::isfinite(a))) return 0.0;
  return pred(a * b);
}
inline double div_up(double a, double b) {
  if (a == 0.0 && b != 0.0 && std::isfinite(b)) return 0.0;
  return succ(a / b);
}
inline double div_down(double a, double b) {
  if (a == 0.0 && b != 0.0 && std::isfinite(b)) return 0.0;
  return pred(a / b);
}

// IEEE sqrt is correctly rounded, so one step suffices as well.
inline double sqrt_up(double x) { return x == 0.0 ? 0.0 : succ(std::sqrt(x)); }
inline double sqrt_down(double x) { return x <= 0.0 ? 0.0 : pred(std::sqrt(x)); }

// Upper bound on |computed - exact| for one round-to-nearest operation that
// produced x: one ulp of x (the half-ulp error rounded outward).
inline double ulp_bound(double x) {
  const double a = std::fabs(x);
  return sub_up(succ(a), a);
}

// Upper bound on |z| for complex z given as (re, im).
inline double cabs_up(double re, double im) {
  return sqrt_up(add_up(mul_up(re, re), mul_up(im, im)));
}

// Lower bound on |z|.
inline double cabs_down(double re, double im) {
  const double s = add_down(mul_down(re, re), mul_down(im, im));
  return sqrt_down(s);
}

// (1 + u)^k style inflation factor for k-term nonnegative accumulations,
// valid for any summation order: exact_sum <= fl_sum * (1 + gamma_k).
inline double gamma_factor(std::size_t k) {
  const double ku = static_cast<double>(k) * kUnit;
  return div_up(ku, 1.0 - ku);
}

}  // namespace vgamma::rnd

#endif  // VGAMMA_ROUNDING_HPP
