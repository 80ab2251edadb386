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

#ifndef VGAMMA_BOUNDS_HPP
#define VGAMMA_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vgamma/rounding.hpp"

// Self-contained inf-sup interval engine for the handful of real elementary
// functions the library needs (exp, log, sin, cos, atan, sqrt). libm gives no
// error guarantees beyond sqrt, so these are built from argument reduction
// plus truncated series with explicit remainder bounds, evaluated in interval
// arithmetic throughout.

namespace vgamma {

struct Bounds {
  double lo = 0.0;
  double hi = 0.0;

  Bounds() = default;
  explicit Bounds(double v) : lo(v), hi(v) {}
  Bounds(double l, double h) : lo(l), hi(h) {}

  bool valid() const { return lo <= hi && std::isfinite(lo) && std::isfinite(hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  double width() const { return rnd::sub_up(hi, lo); }
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
};

inline Bounds operator-(const Bounds& a) { return {-a.hi, -a.lo}; }

inline Bounds operator+(const Bounds& a, const Bounds& b) {
  return {rnd::add_down(a.lo, b.lo), rnd::add_up(a.hi, b.hi)};
}

inline Bounds operator-(const Bounds& a, const Bounds& b) {
  return {rnd::sub_down(a.lo, b.hi), rnd::sub_up(a.hi, b.lo)};
}

inline Bounds operator*(const Bounds& a, const Bounds& b) {
  const double d1 = rnd::mul_down(a.lo, b.lo), d2 = rnd::mul_down(a.lo, b.hi);
  const double d3 = rnd::mul_down(a.hi, b.lo), d4 = rnd::mul_down(a.hi, b.hi);
  const double u1 = rnd::mul_up(a.lo, b.lo), u2 = rnd::mul_up(a.lo, b.hi);
  const double u3 = rnd::mul_up(a.hi, b.lo), u4 = rnd::mul_up(a.hi, b.hi);
  return {std::min(std::min(d1, d2), std::min(d3, d4)),
          std::max(std::max(u1, u2), std::max(u3, u4))};
}

inline Bounds operator/(const Bounds& a, const Bounds& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0)
    throw std::domain_error("Bounds division by interval containing zero");
  const double d1 = rnd::div_down(a.lo, b.lo), d2 = rnd::div_down(a.lo, b.hi);
  const double d3 = rnd::div_down(a.hi, b.lo), d4 = rnd::div_down(a.hi, b.hi);
  const double u1 = rnd::div_up(a.lo, b.lo), u2 = rnd::div_up(a.lo, b.hi);
  const double u3 = rnd::div_up(a.hi, b.lo), u4 = rnd::div_up(a.hi, b.hi);
  return {std::min(std::min(d1, d2), std::min(d3, d4)),
          std::max(std::max(u1, u2), std::max(u3, u4))};
}

inline Bounds sqr(const Bounds& a) {
  if (a.lo >= 0.0) return {rnd::mul_down(a.lo, a.lo), rnd::mul_up(a.hi, a.hi)};
  if (a.hi <= 0.0) return {rnd::mul_down(a.hi, a.hi), rnd::mul_up(a.lo, a.lo)};
  const double m = std::max(-a.lo, a.hi);
  return {0.0, rnd::mul_up(m, m)};
}

inline Bounds sqrt(const Bounds& a) {
  if (a.lo < 0.0) throw std::domain_error("Bounds sqrt of negative interval");
  return {rnd::sqrt_down(a.lo), rnd::sqrt_up(a.hi)};
}

inline Bounds hull(const Bounds& a, const Bounds& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace consts {
// Nearest doubles bracketed by one ulp on each side.
inline Bounds ln2() { return {rnd::pred(0x1.62e42fefa39efp-1), rnd::succ(0x1.62e42fefa39efp-1)}; }
inline Bounds pi() { return {rnd::pred(0x1.921fb54442d18p+1), rnd::succ(0x1.921fb54442d18p+1)}; }
inline Bounds cosh1() { return {rnd::pred(0x1.8b07551d9f550p+0), rnd::succ(0x1.8b07551d9f550p+0)}; }

// hi/lo splits with 26-bit hi parts: k*hi is exact for integer |k| < 2^26,
// and the residual beyond hi+lo is below the stated bound.
inline constexpr double kLn2Hi = 0x1.62e4300000000p-1;
inline constexpr double kLn2Lo = -0x1.05c610ca86c39p-29;
inline constexpr double kLn2Err = 0x1p-81;
inline Bounds ln2_tail() { return {kLn2Lo - kLn2Err, kLn2Lo + kLn2Err}; }
inline constexpr double kPi2Hi = 0x1.921fb54000000p+0;
inline constexpr double kPi2Lo = 0x1.10b4611a62633p-30;
inline constexpr double kPi2Err = 0x1p-83;
inline Bounds pi2_tail() { return {kPi2Lo - kPi2Err, kPi2Lo + kPi2Err}; }
}  // namespace consts

namespace detail {

// exp at a point, via x = k*ln2 + r, |r| <= 0.35, then a degree-16 Taylor
// polynomial with explicit tail bound.
inline Bounds exp_point(double x) {
  if (x > 709.0) return {8.0e307, rnd::kInf};  // exp(709) > 8.2e307
  if (x < -746.0) return {0.0, rnd::kEta};     // exp(-746) < denorm_min
  const double k = std::nearbyint(x / 0.6931471805599453);
  // k * kLn2Hi is exact, so the reduced argument keeps full accuracy.
  Bounds r = (Bounds(x) - Bounds(k * consts::kLn2Hi)) - Bounds(k) * consts::ln2_tail();
  Bounds s(1.0);
  for (int i = 16; i >= 1; --i) s = Bounds(1.0) + r * s / Bounds(static_cast<double>(i));
  const double rm = r.mag();
  double tail = rm;
  for (int i = 2; i <= 17; ++i) tail = rnd::mul_up(tail, rnd::div_up(rm, i));
  tail = rnd::div_up(tail, rnd::sub_down(1.0, rnd::div_up(rm, 18.0)));
  s = s + Bounds(-tail, tail);
  const int ik = static_cast<int>(k);
  return {rnd::pred(std::ldexp(s.lo, ik)), rnd::succ(std::ldexp(s.hi, ik))};
}

// log at a point x > 0: x = m*2^e with m in [2/3, 4/3), log m = 2 atanh(t).
inline Bounds log_point(double x) {
  if (x <= 0.0) throw std::domain_error("log of nonpositive value");
  int e = 0;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  if (m < 2.0 / 3.0) {
    m *= 2.0;  // exact
    e -= 1;
  }
  const Bounds t = (Bounds(m) - Bounds(1.0)) / (Bounds(m) + Bounds(1.0));
  const Bounds t2 = sqr(t);
  Bounds s(0.0);
  for (int i = 12; i >= 0; --i)
    s = s * t2 + Bounds(1.0) / Bounds(static_cast<double>(2 * i + 1));
  s = s * t * Bounds(2.0);
  const double tm = t.mag();
  double tail = 2.0;
  for (int i = 0; i < 27; ++i) tail = rnd::mul_up(tail, tm);
  tail = rnd::div_up(tail, rnd::mul_down(27.0, rnd::sub_down(1.0, rnd::mul_up(tm, tm))));
  s = s + Bounds(-tail, tail);
  const double ed = static_cast<double>(e);
  return Bounds(ed * consts::kLn2Hi) + (s + Bounds(ed) * consts::ln2_tail());
}

// sin/cos of a small interval y (|y| <= pi/4 + slack) by Taylor series with
// alternating tail bounds.
inline Bounds sin_small(const Bounds& y) {
  const Bounds y2 = sqr(y);
  Bounds s(0.0);
  // sin y = y (1 - y^2/6 (1 - y^2/20 (...)))  expanded as polynomial in y^2
  for (int i = 9; i >= 1; --i)
    s = (Bounds(1.0) - s) * y2 / Bounds(static_cast<double>(2 * i) * (2 * i + 1));
  s = y * (Bounds(1.0) - s);
  const double ym = y.mag();
  double tail = ym;
  for (int i = 2; i <= 21; ++i) tail = rnd::mul_up(tail, rnd::div_up(ym, i));
  return s + Bounds(-tail, tail);
}

inline Bounds cos_small(const Bounds& y) {
  const Bounds y2 = sqr(y);
  Bounds s(0.0);
  for (int i = 10; i >= 1; --i)
    s = (Bounds(1.0) - s) * y2 / Bounds(static_cast<double>(2 * i - 1) * (2 * i));
  s = Bounds(1.0) - s;
  const double ym = y.mag();
  double tail = 1.0;
  for (int i = 1; i <= 22; ++i) tail = rnd::mul_up(tail, rnd::div_up(ym, i));
  return s + Bounds(-tail, tail);
}

inline void sincos_point(double x, Bounds& s, Bounds& c) {
  const double half_pi = 1.5707963267948966;
  const double k = std::nearbyint(x / half_pi);
  const Bounds y = std::fabs(k) < 0x1p25
                       ? (Bounds(x) - Bounds(k * consts::kPi2Hi)) - Bounds(k) * consts::pi2_tail()
                       : Bounds(x) - Bounds(k) * (consts::pi() / Bounds(2.0));
  const long q = static_cast<long>(k) & 3L;  // k mod 4, two's complement safe for k>=-2^62
  const long qq = ((q % 4) + 4) % 4;
  Bounds sy = sin_small(y), cy = cos_small(y);
  switch (qq) {
    case 0: s = sy; c = cy; break;
    case 1: s = cy; c = -sy; break;
    case 2: s = -sy; c = -cy; break;
    default: s = -cy; c = sy; break;
  }
}

// atan on [0, 1] after two half-angle reductions; callers handle sign and
// reciprocal ranges.
inline Bounds atan_core(const Bounds& x) {
  Bounds s = x;
  int halvings = 0;
  for (; halvings < 2; ++halvings)
    s = s / (Bounds(1.0) + sqrt(Bounds(1.0) + sqr(s)));
  const Bounds s2 = sqr(s);
  Bounds acc(0.0);
  for (int i = 13; i >= 0; --i) {
    Bounds term = Bounds(1.0) / Bounds(static_cast<double>(2 * i + 1));
    if (i % 2 == 1) term = -term;
    acc = acc * s2 + term;
  }
  acc = acc * s;
  const double sm = s.mag();
  double tail = sm;
  for (int i = 0; i < 28; ++i) tail = rnd::mul_up(tail, sm);
  tail = rnd::div_up(tail, 29.0);
  acc = acc + Bounds(-tail, tail);
  return acc * Bounds(4.0);  // undo the two half-angle reductions
}

inline Bounds atan_point_nonneg(double x) {
  if (x <= 1.0) return atan_core(Bounds(x));
  const Bounds inv = Bounds(1.0) / Bounds(x);
  return consts::pi() / Bounds(2.0) - atan_core(inv);
}

}  // namespace detail

// Monotone envelopes over intervals.
inline Bounds exp(const Bounds& x) {
  return {detail::exp_point(x.lo).lo, detail::exp_point(x.hi).hi};
}

inline Bounds log(const Bounds& x) {
  if (x.lo <= 0.0) throw std::domain_error("Bounds log of interval reaching 0");
  return {detail::log_point(x.lo).lo, detail::log_point(x.hi).hi};
}

inline Bounds atan(const Bounds& x) {
  const Bounds lo = x.lo >= 0.0 ? detail::atan_point_nonneg(x.lo) : -detail::atan_point_nonneg(-x.lo);
  const Bounds hi = x.hi >= 0.0 ? detail::atan_point_nonneg(x.hi) : -detail::atan_point_nonneg(-x.hi);
  return {lo.lo, hi.hi};
}

// sin/cos over an interval: point evaluation at the midpoint plus a unit
// Lipschitz widening. Adequate here (arguments are points up to rounding).
inline Bounds sin(const Bounds& x) {
  const double m = 0.5 * (x.lo + x.hi);
  const double hw = rnd::add_up(rnd::sub_up(x.hi, m), rnd::sub_up(m, x.lo));
  Bounds s, c;
  detail::sincos_point(m, s, c);
  Bounds r = s + Bounds(-hw, hw);
  return {std::max(r.lo, -1.0), std::min(r.hi, 1.0)};
}

inline Bounds cos(const Bounds& x) {
  const double m = 0.5 * (x.lo + x.hi);
  const double hw = rnd::add_up(rnd::sub_up(x.hi, m), rnd::sub_up(m, x.lo));
  Bounds s, c;
  detail::sincos_point(m, s, c);
  Bounds r = c + Bounds(-hw, hw);
  return {std::max(r.lo, -1.0), std::min(r.hi, 1.0)};
}

inline Bounds pow_int(const Bounds& x, int k) {
  if (k == 0) return Bounds(1.0);
  if (k < 0) return Bounds(1.0) / pow_int(x, -k);
  Bounds acc(1.0);
  Bounds base = x;
  int e = k;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = sqr(base);
    e >>= 1;
  }
  return acc;
}

// x^y for x > 0 via exp(y log x).
inline Bounds pow(const Bounds& x, const Bounds& y) { return exp(y * log(x)); }

}  // namespace vgamma

#endif  // VGAMMA_BOUNDS_HPP
