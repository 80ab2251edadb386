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

#include "vgamma/interval.hpp"

#include <atomic>

#include "vgamma/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vgamma {

namespace par {
namespace {
std::atomic<int> g_max_threads{0};  // 0 = library default
}  // namespace

int max_threads() {
  const int v = g_max_threads.load(std::memory_order_relaxed);
  if (v > 0) return v;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_max_threads(int n) { g_max_threads.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

}  // namespace par

// ---------------------------------------------------------------------------
// Disc elementary functions

ComplexDisc elem_exp(const ComplexDisc& z) {
  const Bounds ex = detail::exp_point(z.mid.real());
  Bounds sy, cy;
  detail::sincos_point(z.mid.imag(), sy, cy);
  ComplexDisc center = disc_from_box(ex * cy, ex * sy);
  // |e^w - e^c| <= |e^c| (e^{|w-c|} - 1) <= e^{Re c} (e^r - 1)
  const double grow = rnd::mul_up(ex.hi, rnd::sub_up(detail::exp_point(z.rad).hi, 1.0));
  center.rad = rnd::add_up(center.rad, grow);
  return center;
}

ComplexDisc elem_log(const ComplexDisc& z) {
  const double re = z.mid.real(), im = z.mid.imag();
  if (!(rnd::sub_down(re, z.rad) > 0.0))
    throw std::domain_error("elem_log: disc not contained in the right half plane");
  const Bounds habs = sqrt(sqr(Bounds(re)) + sqr(Bounds(im)));
  const Bounds lg = log(habs);
  const Bounds ar = atan(Bounds(im) / Bounds(re));
  ComplexDisc center = disc_from_box(lg, ar);
  // Lipschitz bound: |log'| = 1/|w| <= 1/(|c| - r) on the disc.
  const double cabs_lo = rnd::cabs_down(re, im);
  const double lip = rnd::div_up(z.rad, rnd::sub_down(cabs_lo, z.rad));
  center.rad = rnd::add_up(center.rad, lip);
  return center;
}

ComplexDisc complex_pow(const ComplexDisc& base, const ComplexDisc& expo) {
  return elem_exp(disc_mul(expo, elem_log(base)));
}

ComplexDisc elem_sqrt(const ComplexDisc& z) { return complex_pow(z, ComplexDisc(0.5)); }

// ---------------------------------------------------------------------------
// IntervalMatrix

Eigen::MatrixXd IntervalMatrix::mag() const {
  Eigen::MatrixXd out(rows(), cols());
  for (Eigen::Index j = 0; j < cols(); ++j)
    for (Eigen::Index i = 0; i < rows(); ++i)
      out(i, j) = rnd::add_up(rnd::cabs_up(mid(i, j).real(), mid(i, j).imag()), rad(i, j));
  return out;
}

bool IntervalMatrix::contains(const Eigen::MatrixXcd& point, double slack) const {
  if (point.rows() != rows() || point.cols() != cols()) return false;
  for (Eigen::Index j = 0; j < cols(); ++j)
    for (Eigen::Index i = 0; i < rows(); ++i) {
      const Complex d = point(i, j) - mid(i, j);
      if (rnd::cabs_down(d.real(), d.imag()) > rnd::add_up(rad(i, j), slack)) return false;
    }
  return true;
}

IntervalMatrix add(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("add: dimension mismatch");
  IntervalMatrix out(a.rows(), a.cols());
  out.mid = a.mid + b.mid;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      out.rad(i, j) = rnd::add_up(rnd::add_up(a.rad(i, j), b.rad(i, j)),
                                  detail::cerr1(out.mid(i, j)));
  return out;
}

IntervalMatrix sub(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("sub: dimension mismatch");
  IntervalMatrix out(a.rows(), a.cols());
  out.mid = a.mid - b.mid;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      out.rad(i, j) = rnd::add_up(rnd::add_up(a.rad(i, j), b.rad(i, j)),
                                  detail::cerr1(out.mid(i, j)));
  return out;
}

namespace {

// Column-oriented fused kernel. For output column j it accumulates, in plain
// round-to-nearest arithmetic,
//   cm   = sum_l  Amid(:,l) Bmid(l,j)
//   racc = sum_l  |Amid(:,l)| Brad(l,j) + Arad(:,l) |Bmid(l,j)| + Arad Brad
//   aacc = sum_l  |Amid(:,l)| |Bmid(l,j)|
// and then inflates: the nonnegative sums by a gamma factor covering their
// own rounding and the downward error of the |.| evaluations, and the
// midpoint product by gc * aacc (complex dot-product error bound).
void mat_mul_impl(const IntervalMatrix& a, const IntervalMatrix& b, IntervalMatrix& out,
                  bool parallel) {
  const Eigen::Index m = a.rows(), k = a.cols(), n = b.cols();
  Eigen::MatrixXd aabs(m, k), babs(k, n);
  for (Eigen::Index l = 0; l < k; ++l)
    for (Eigen::Index i = 0; i < m; ++i)
      aabs(i, l) = std::sqrt(a.mid(i, l).real() * a.mid(i, l).real() +
                             a.mid(i, l).imag() * a.mid(i, l).imag());
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index l = 0; l < k; ++l)
      babs(l, j) = std::sqrt(b.mid(l, j).real() * b.mid(l, j).real() +
                             b.mid(l, j).imag() * b.mid(l, j).imag());

  // Inflation constants: gf covers the rounding of the nonnegative
  // accumulations (including the downward slack of the |.| evaluations),
  // gc * aacc bounds the componentwise error of the midpoint dot products.
  const double gf = rnd::gamma_factor(2 * static_cast<std::size_t>(k) + 16);
  const double infl = rnd::add_up(1.0, gf);
  const double gc = rnd::mul_up(2.0, rnd::gamma_factor(2 * static_cast<std::size_t>(k) + 4));
  const double eta_guard = static_cast<double>(8 * k + 8) * rnd::kEta;

  const int nthreads = parallel ? par::max_threads() : 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads) if (nthreads > 1 && m * n >= 1024)
#endif
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXd cre = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd cim = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd racc = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd aacc = Eigen::VectorXd::Zero(m);
    for (Eigen::Index l = 0; l < k; ++l) {
      const double bre = b.mid(l, j).real();
      const double bim = b.mid(l, j).imag();
      const double br = b.rad(l, j);
      const double bb = babs(l, j);
      const double bbr = bb + br;
      for (Eigen::Index i = 0; i < m; ++i) {
        const double are = a.mid(i, l).real();
        const double aim = a.mid(i, l).imag();
        cre(i) += are * bre - aim * bim;
        cim(i) += are * bim + aim * bre;
        racc(i) += aabs(i, l) * br + a.rad(i, l) * bbr;
        aacc(i) += aabs(i, l) * bb;
      }
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      out.mid(i, j) = Complex{cre(i), cim(i)};
      const double base = rnd::add_up(racc(i), rnd::mul_up(gc, aacc(i)));
      out.rad(i, j) = rnd::add_up(rnd::mul_up(base, infl), eta_guard);
    }
  }
}

}  // namespace

IntervalMatrix mat_mul(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimension mismatch");
  IntervalMatrix out(a.rows(), b.cols());
  mat_mul_impl(a, b, out, true);
  return out;
}

namespace {

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double z = s - a;
  e = (a - (s - z)) + (b - z);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// Compensated dot of the 2k-term sequence x1*y1 + ... with running magnitude
// sum; returns the corrected value, the |term| sum, and the term count.
struct Dot2 {
  double acc = 0.0;
  double comp = 0.0;
  double mags = 0.0;
  void add(double x, double y) {
    double p, ep, t, es;
    two_prod(x, y, p, ep);
    two_sum(acc, p, t, es);
    acc = t;
    comp += ep + es;
    mags += std::fabs(p);
  }
  double value() const { return acc + comp; }
};

}  // namespace

IntervalMatrix mat_mul_accurate(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul_accurate: inner dimension mismatch");
  const Eigen::Index m = a.rows(), k = a.cols(), n = b.cols();
  IntervalMatrix out(m, n);
  // Error bound for the compensated dot over K terms:
  // |value - exact| <= u |value| + gamma_K^2 sum|terms| (plus eta guards).
  const double g = rnd::gamma_factor(4 * static_cast<std::size_t>(k) + 8);
  const double g2 = rnd::mul_up(rnd::mul_up(2.0, g), g);
  const double eta_guard = static_cast<double>(8 * k + 8) * rnd::kEta;

  const int nthreads = par::max_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(nthreads) if (nthreads > 1 && m * n >= 256)
#endif
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < m; ++i) {
      Dot2 re, im;
      for (Eigen::Index l = 0; l < k; ++l) {
        const double ar = a(i, l).real(), ai = a(i, l).imag();
        const double br = b(l, j).real(), bi = b(l, j).imag();
        re.add(ar, br);
        re.add(ai, -bi);
        im.add(ar, bi);
        im.add(ai, br);
      }
      const double vre = re.value(), vim = im.value();
      out.mid(i, j) = Complex{vre, vim};
      double err = rnd::add_up(rnd::mul_up(2.0 * rnd::kUnit, std::fabs(vre) + std::fabs(vim)),
                               rnd::mul_up(g2, re.mags + im.mags));
      out.rad(i, j) = rnd::add_up(err, eta_guard);
    }
  return out;
}

IntervalMatrix mat_mul_serial(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimension mismatch");
  IntervalMatrix out(a.rows(), b.cols());
  mat_mul_impl(a, b, out, false);
  return out;
}

double norm_bound(const IntervalMatrix& a, NormKind p) {
  const Eigen::MatrixXd m = a.mag();
  double best = 0.0;
  if (p == NormKind::Inf) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      double s = 0.0;
      for (Eigen::Index j = 0; j < m.cols(); ++j) s = rnd::add_up(s, m(i, j));
      best = std::max(best, s);
    }
  } else {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double s = 0.0;
      for (Eigen::Index i = 0; i < m.rows(); ++i) s = rnd::add_up(s, m(i, j));
      best = std::max(best, s);
    }
  }
  return best;
}

double norm_lower(const Eigen::MatrixXcd& m, NormKind p) {
  double best = 0.0;
  if (p == NormKind::Inf) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      double s = 0.0;
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        s = rnd::add_down(s, rnd::cabs_down(m(i, j).real(), m(i, j).imag()));
      best = std::max(best, s);
    }
  } else {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double s = 0.0;
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        s = rnd::add_down(s, rnd::cabs_down(m(i, j).real(), m(i, j).imag()));
      best = std::max(best, s);
    }
  }
  return best;
}

bool intersects(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex d = a.mid(i, j) - b.mid(i, j);
      if (rnd::cabs_down(d.real(), d.imag()) > rnd::add_up(a.rad(i, j), b.rad(i, j)))
        return false;
    }
  return true;
}

}  // namespace vgamma
