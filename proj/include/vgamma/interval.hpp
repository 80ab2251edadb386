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

#ifndef VGAMMA_INTERVAL_HPP
#define VGAMMA_INTERVAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "vgamma/bounds.hpp"
#include "vgamma/rounding.hpp"

// Midpoint-radius interval arithmetic: real intervals, complex discs
// {z : |z - mid| <= rad}, and dense interval matrices with elementwise
// radii. Every operation returns an enclosure of the exact image set,
// with all rounding folded into the radius.

namespace vgamma {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// RealInterval

struct RealInterval {
  double mid = 0.0;
  double rad = 0.0;

  RealInterval() = default;
  explicit RealInterval(double m) : mid(m) {}
  RealInterval(double m, double r) : mid(m), rad(r) {}

  static RealInterval from_bounds(const Bounds& b) {
    const double m = 0.5 * (b.lo + b.hi);
    const double r = std::max(rnd::sub_up(b.hi, m), rnd::sub_up(m, b.lo));
    return {m, r};
  }
  Bounds bounds() const { return {rnd::sub_down(mid, rad), rnd::add_up(mid, rad)}; }

  bool valid() const { return std::isfinite(mid) && std::isfinite(rad) && rad >= 0.0; }
  double upper() const { return rnd::add_up(mid, rad); }
  double lower() const { return rnd::sub_down(mid, rad); }
  bool contains(double x) const { return lower() <= x && x <= upper(); }
};

inline RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  return RealInterval::from_bounds(a.bounds() + b.bounds());
}
inline RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  return RealInterval::from_bounds(a.bounds() - b.bounds());
}
inline RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  return RealInterval::from_bounds(a.bounds() * b.bounds());
}
inline RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  return RealInterval::from_bounds(a.bounds() / b.bounds());
}

// ---------------------------------------------------------------------------
// ComplexDisc

struct ComplexDisc {
  Complex mid{0.0, 0.0};
  double rad = 0.0;

  ComplexDisc() = default;
  explicit ComplexDisc(Complex m) : mid(m) {}
  explicit ComplexDisc(double m) : mid(m, 0.0) {}
  ComplexDisc(Complex m, double r) : mid(m), rad(r) {}
  ComplexDisc(double re, double im, double r) : mid(re, im), rad(r) {}

  bool valid() const {
    return std::isfinite(mid.real()) && std::isfinite(mid.imag()) &&
           std::isfinite(rad) && rad >= 0.0;
  }
  // Upper/lower bounds on |z| over the disc.
  double abs_up() const { return rnd::add_up(rnd::cabs_up(mid.real(), mid.imag()), rad); }
  double abs_down() const {
    const double d = rnd::sub_down(rnd::cabs_down(mid.real(), mid.imag()), rad);
    return d > 0.0 ? d : 0.0;
  }
  bool contains(Complex w, double slack = 0.0) const {
    const Complex d = w - mid;
    return rnd::cabs_down(d.real(), d.imag()) <= rnd::add_up(rad, slack);
  }
  bool contains_disc(const ComplexDisc& inner) const {
    const Complex d = inner.mid - mid;
    return rnd::add_up(rnd::cabs_up(d.real(), d.imag()), inner.rad) <= rad;
  }
};

namespace detail {
// Upper bound on the midpoint rounding error of one complex add/sub.
inline double cerr1(Complex z) {
  return rnd::add_up(rnd::ulp_bound(z.real()), rnd::ulp_bound(z.imag()));
}
}  // namespace detail

inline ComplexDisc disc_add(const ComplexDisc& a, const ComplexDisc& b) {
  const Complex m = a.mid + b.mid;
  return {m, rnd::add_up(rnd::add_up(a.rad, b.rad), detail::cerr1(m))};
}
inline ComplexDisc disc_sub(const ComplexDisc& a, const ComplexDisc& b) {
  const Complex m = a.mid - b.mid;
  return {m, rnd::add_up(rnd::add_up(a.rad, b.rad), detail::cerr1(m))};
}

inline ComplexDisc disc_mul(const ComplexDisc& a, const ComplexDisc& b) {
  const double p1 = a.mid.real() * b.mid.real();
  const double p2 = a.mid.imag() * b.mid.imag();
  const double p3 = a.mid.real() * b.mid.imag();
  const double p4 = a.mid.imag() * b.mid.real();
  const Complex m{p1 - p2, p3 + p4};
  double err = rnd::add_up(rnd::ulp_bound(p1), rnd::ulp_bound(p2));
  err = rnd::add_up(err, rnd::ulp_bound(m.real()));
  err = rnd::add_up(err, rnd::add_up(rnd::ulp_bound(p3), rnd::ulp_bound(p4)));
  err = rnd::add_up(err, rnd::ulp_bound(m.imag()));
  const double amag = rnd::cabs_up(a.mid.real(), a.mid.imag());
  const double bmag = rnd::cabs_up(b.mid.real(), b.mid.imag());
  double r = rnd::mul_up(amag, b.rad);
  r = rnd::add_up(r, rnd::mul_up(a.rad, bmag));
  r = rnd::add_up(r, rnd::mul_up(a.rad, b.rad));
  r = rnd::add_up(r, err);
  return {m, r};
}

// Exact image of a disc under inversion is again a disc (Moebius map):
// center conj(c)/(|c|^2 - r^2), radius r/(|c|^2 - r^2).
inline ComplexDisc disc_inv(const ComplexDisc& b) {
  const double re = b.mid.real(), im = b.mid.imag();
  const double dlo = rnd::sub_down(rnd::add_down(rnd::mul_down(re, re), rnd::mul_down(im, im)),
                                   rnd::mul_up(b.rad, b.rad));
  if (!(dlo > 0.0))
    throw std::domain_error("disc_inv: interval contains zero (possible singularity)");
  const double dhi = rnd::sub_up(rnd::add_up(rnd::mul_up(re, re), rnd::mul_up(im, im)),
                                 rnd::mul_down(b.rad, b.rad));
  const Bounds d{dlo, dhi};
  const Bounds cre = Bounds(re) / d;
  const Bounds cim = Bounds(-im) / d;
  const RealInterval rre = RealInterval::from_bounds(cre);
  const RealInterval rim = RealInterval::from_bounds(cim);
  const double r = rnd::add_up(rnd::div_up(b.rad, dlo), rnd::add_up(rre.rad, rim.rad));
  return {Complex{rre.mid, rim.mid}, r};
}

inline ComplexDisc disc_div(const ComplexDisc& a, const ComplexDisc& b) {
  return disc_mul(a, disc_inv(b));
}

inline ComplexDisc operator+(const ComplexDisc& a, const ComplexDisc& b) { return disc_add(a, b); }
inline ComplexDisc operator-(const ComplexDisc& a, const ComplexDisc& b) { return disc_sub(a, b); }
inline ComplexDisc operator*(const ComplexDisc& a, const ComplexDisc& b) { return disc_mul(a, b); }
inline ComplexDisc operator/(const ComplexDisc& a, const ComplexDisc& b) { return disc_div(a, b); }
inline ComplexDisc operator-(const ComplexDisc& a) { return {-a.mid, a.rad}; }

// Disc from two real-interval components.
inline ComplexDisc disc_from_box(const Bounds& re, const Bounds& im) {
  const RealInterval r = RealInterval::from_bounds(re);
  const RealInterval i = RealInterval::from_bounds(im);
  return {Complex{r.mid, i.mid}, rnd::add_up(r.rad, i.rad)};
}

// exp over a disc: center image enclosed via the real kernels, plus the exact
// growth bound |e^c| (e^r - 1) over the disc.
ComplexDisc elem_exp(const ComplexDisc& z);

// Principal log over a disc in the right half plane (Re(mid) - rad > 0).
ComplexDisc elem_log(const ComplexDisc& z);

// b^e = exp(e log b); same half-plane precondition as elem_log.
ComplexDisc complex_pow(const ComplexDisc& base, const ComplexDisc& expo);

ComplexDisc elem_sqrt(const ComplexDisc& z);

// ---------------------------------------------------------------------------
// IntervalMatrix

enum class NormKind { One, Inf };

class IntervalMatrix {
 public:
  Eigen::MatrixXcd mid;
  Eigen::MatrixXd rad;

  IntervalMatrix() = default;
  IntervalMatrix(Eigen::Index r, Eigen::Index c)
      : mid(Eigen::MatrixXcd::Zero(r, c)), rad(Eigen::MatrixXd::Zero(r, c)) {}
  explicit IntervalMatrix(const Eigen::MatrixXcd& m)
      : mid(m), rad(Eigen::MatrixXd::Zero(m.rows(), m.cols())) {}
  IntervalMatrix(const Eigen::MatrixXcd& m, const Eigen::MatrixXd& r) : mid(m), rad(r) {
    if (m.rows() != r.rows() || m.cols() != r.cols())
      throw std::invalid_argument("IntervalMatrix: mid/rad dimension mismatch");
  }

  static IntervalMatrix identity(Eigen::Index n) {
    return IntervalMatrix(Eigen::MatrixXcd::Identity(n, n));
  }

  Eigen::Index rows() const { return mid.rows(); }
  Eigen::Index cols() const { return mid.cols(); }

  ComplexDisc operator()(Eigen::Index i, Eigen::Index j) const { return {mid(i, j), rad(i, j)}; }
  void set(Eigen::Index i, Eigen::Index j, const ComplexDisc& d) {
    mid(i, j) = d.mid;
    rad(i, j) = d.rad;
  }

  bool valid() const {
    return mid.allFinite() && rad.allFinite() && (rad.array() >= 0.0).all();
  }

  // Elementwise upper bound of |member| over the interval: |mid| + rad.
  Eigen::MatrixXd mag() const;

  IntervalMatrix transpose() const { return {mid.transpose(), rad.transpose()}; }
  IntervalMatrix block(Eigen::Index i, Eigen::Index j, Eigen::Index r, Eigen::Index c) const {
    return {mid.block(i, j, r, c), rad.block(i, j, r, c)};
  }
  void set_block(Eigen::Index i, Eigen::Index j, const IntervalMatrix& sub) {
    mid.block(i, j, sub.rows(), sub.cols()) = sub.mid;
    rad.block(i, j, sub.rows(), sub.cols()) = sub.rad;
  }

  bool contains(const Eigen::MatrixXcd& point, double slack = 0.0) const;
};

IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix sub(const IntervalMatrix& a, const IntervalMatrix& b);

// Interval matrix product with the three-term radius bound
// |A| S + R |B| + R S plus rounding inflation of the midpoint product.
// mat_mul runs the OpenMP kernel, mat_mul_serial the reference loop; both
// perform the identical per-entry arithmetic and return identical bits.
IntervalMatrix mat_mul(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix mat_mul_serial(const IntervalMatrix& a, const IntervalMatrix& b);

// Enclosure of the exact product of two point matrices with compensated
// (error-free transformation) dot products: the radius stays near one ulp of
// each entry instead of growing with the accumulated magnitude. Used where
// enclosure tightness feeds verification quality.
IntervalMatrix mat_mul_accurate(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Upper bound of max_{X in A} ||X||_p for p in {1, inf}.
double norm_bound(const IntervalMatrix& a, NormKind p);

// Lower bound of ||mid||_p (used by the relative-radius metric).
double norm_lower(const Eigen::MatrixXcd& m, NormKind p);

// True if the two interval matrices intersect elementwise (both containing a
// common point is the typical use).
bool intersects(const IntervalMatrix& a, const IntervalMatrix& b);

}  // namespace vgamma

#endif  // VGAMMA_INTERVAL_HPP
