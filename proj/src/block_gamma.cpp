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

#include "vgamma/block_gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vgamma {

namespace {

ComplexDisc shift(const ComplexDisc& z, double s) { return disc_add(z, ComplexDisc(s)); }

std::vector<int> unit_sizes(int p) { return std::vector<int>(p, 1); }

// Row sums of R (optionally with the unit superdiagonal of M added) as an
// interval over the rounding, per norm kind.
Bounds norm_interval(const Eigen::MatrixXd& r, const std::vector<int>& sizes, NormKind p) {
  const int n = static_cast<int>(r.rows());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  int off = 0;
  for (int s : sizes) {
    for (int i = 0; i + 1 < s; ++i) m(off + i, off + i + 1) = 1.0;
    off += s;
  }
  double lo = 0.0, hi = 0.0;
  for (int a = 0; a < n; ++a) {
    double slo = 0.0, shi = 0.0;
    for (int b = 0; b < n; ++b) {
      const double v = (p == NormKind::Inf) ? r(a, b) + m(a, b) : r(b, a) + m(b, a);
      slo = rnd::add_down(slo, v);
      shi = rnd::add_up(shi, v);
    }
    lo = std::max(lo, slo);
    hi = std::max(hi, shi);
  }
  return {lo, hi};
}

// Upper bound of Gamma'(x) over a real interval via an order-1 jet.
std::optional<double> gamma_prime_upper(const Bounds& x) {
  const RealInterval ri = RealInterval::from_bounds(x);
  try {
    const GammaJet jet = gamma_jet_auto(ComplexDisc(Complex{ri.mid, 0.0}, ri.rad), 1);
    return rnd::add_up(jet.coeffs[1].mid.real(), jet.coeffs[1].rad);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<double> delta_impl(Complex lambda_hat, const Eigen::MatrixXd& r,
                                 const std::vector<int>& sizes, NormKind p) {
  const Bounds nmr = norm_interval(r, sizes, p);
  const double re = lambda_hat.real();
  if (!(rnd::sub_down(re, nmr.hi) > 0.0)) return std::nullopt;
  const Bounds x_plus = Bounds(re) + nmr;
  const Bounds x_minus = Bounds(re) - nmr;
  const auto gp = gamma_prime_upper(x_plus);
  if (!gp) return std::nullopt;
  const double sum =
      rnd::add_up(*gp, rnd::add_up(omega_range(x_plus).hi, omega_range(x_minus).hi));
  if (!(sum > 0.0)) return std::nullopt;
  const double r_upper = norm_interval(r, {}, p).hi;
  if (r_upper == 0.0) return 0.0;  // Q = 0, the difference vanishes identically
  return rnd::mul_up(r_upper, sum);
}

}  // namespace

Bounds omega_range(const Bounds& alpha) {
  if (!(alpha.lo > 0.0)) throw std::domain_error("omega_bound: alpha must be positive");
  const Bounds one(1.0), two(2.0);
  const Bounds a1 = alpha + one;
  const Bounds num = two * alpha + one;
  const Bounds term1 = num / (sqr(alpha) * sqr(a1));
  const Bounds term2 = (consts::cosh1() - one) / sqr(alpha + two);
  return term1 + term2;
}

double omega_bound(double alpha) { return omega_range(Bounds(alpha)).hi; }

std::optional<double> delta_spectral(Complex lambda_hat, const Eigen::MatrixXd& r, NormKind p) {
  return delta_impl(lambda_hat, r, {}, p);
}

std::optional<double> delta_jordan(Complex lambda_hat, const std::vector<int>& sizes,
                                   const Eigen::MatrixXd& r, NormKind p) {
  return delta_impl(lambda_hat, r, sizes, p);
}

IntervalMatrix gamma_block_center(Complex lambda_hat, const std::vector<int>& sizes) {
  const int p = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int n_max = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  if (p <= 0) throw std::invalid_argument("gamma_block_center: empty structure");
  const GammaJet jet = gamma_jet_auto(ComplexDisc(lambda_hat), n_max - 1);
  IntervalMatrix out(p, p);
  int off = 0;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i)
      for (int d = 0; i + d < s; ++d) out.set(off + i, off + i + d, jet.coeffs[d]);
    off += s;
  }
  return out;
}

int select_m(Complex lambda_hat, double norm, ShiftDirection dir) {
  const double base = std::floor(rnd::sub_down(lambda_hat.real(), norm));
  switch (dir) {
    case ShiftDirection::Up:
      return static_cast<int>(1.0 - base);
    case ShiftDirection::Down:
      return static_cast<int>(base - 1.0);
    default:
      return static_cast<int>(-2.0 - base);
  }
}

namespace {

// The scalar factor product as a disc (carries the rounding of the center).
ComplexDisc scalar_factor_product(Complex lambda_hat, int from, int to, int sign) {
  ComplexDisc prod(1.0);
  for (int i = from; i <= to; ++i)
    prod = disc_mul(prod, shift(ComplexDisc(lambda_hat), sign * static_cast<double>(i)));
  return prod;
}

// Upper bound of |lambda + s|.
double abs_shift_up(Complex lambda_hat, double s) {
  const Bounds re = Bounds(lambda_hat.real()) + Bounds(s);
  return sqrt(sqr(re) + sqr(Bounds(lambda_hat.imag()))).hi;
}

Eigen::RowVectorXd column_maxima(const Eigen::MatrixXd& r) {
  Eigen::RowVectorXd rr(r.cols());
  for (Eigen::Index j = 0; j < r.cols(); ++j) rr(j) = r.col(j).maxCoeff();
  return rr;
}

// out = |s| Rk + aprod R + ones rr Rk, all upward.
Eigen::MatrixXd ar_radius_step(const Eigen::MatrixXd& rk, const Eigen::MatrixXd& r,
                               const Eigen::RowVectorXd& rr, double abs_shift, double abs_prod) {
  const int p = static_cast<int>(r.rows());
  Eigen::RowVectorXd t(p);
  for (int l = 0; l < p; ++l) {
    double s = 0.0;
    for (int k2 = 0; k2 < p; ++k2) s = rnd::add_up(s, rnd::mul_up(rr(k2), rk(k2, l)));
    t(l) = s;
  }
  Eigen::MatrixXd out(p, p);
  for (int i = 0; i < p; ++i)
    for (int l = 0; l < p; ++l)
      out(i, l) = rnd::add_up(rnd::add_up(rnd::mul_up(abs_shift, rk(i, l)),
                                          rnd::mul_up(abs_prod, r(i, l))),
                              t(l));
  return out;
}

}  // namespace

ArProduct ar_product_spectral(Complex lambda_hat, const Eigen::MatrixXd& r, int m,
                              ShiftDirection dir) {
  if (m < 1) throw std::invalid_argument("ar_product_spectral: m must be >= 1");
  if (dir == ShiftDirection::ScalarUp)
    throw std::invalid_argument("ar_product_spectral: scalar direction not applicable");
  const int p = static_cast<int>(r.rows());
  const Eigen::RowVectorXd rr = column_maxima(r);
  const bool up = dir == ShiftDirection::Up;

  Eigen::MatrixXd rk = r;
  ComplexDisc prod = up ? ComplexDisc(lambda_hat) : shift(ComplexDisc(lambda_hat), -1.0);
  // up: R_{k+1} needs |prod_{i<=k}|; down: S_{k+1} needs |prod_{i<=k}| of
  // the descending factors. Either way the loop runs m-1 radius updates.
  for (int k = 0; k < m - 1; ++k) {
    const double sft = up ? static_cast<double>(k + 1) : -static_cast<double>(k + 2);
    rk = ar_radius_step(rk, r, rr, abs_shift_up(lambda_hat, sft), prod.abs_up());
    prod = disc_mul(prod, shift(ComplexDisc(lambda_hat), sft));
    if (!(prod.abs_up() < 1e300)) throw EnclosureError("ar_product: scalar product overflow");
  }
  ArProduct out;
  out.c = prod.mid * Eigen::MatrixXcd::Identity(p, p);
  out.r = rk;
  for (int i = 0; i < p; ++i) out.r(i, i) = rnd::add_up(out.r(i, i), prod.rad);
  return out;
}

ArProduct ar_product_jordan(Complex lambda_hat, const std::vector<int>& sizes,
                            const Eigen::MatrixXd& r, int m, ShiftDirection dir) {
  if (m < 1) throw std::invalid_argument("ar_product_jordan: m must be >= 1");
  if (sizes.empty()) throw std::invalid_argument("ar_product_jordan: empty Jordan structure");
  if (dir == ShiftDirection::ScalarUp)
    throw std::invalid_argument("ar_product_jordan: scalar direction not applicable");
  const int p = std::accumulate(sizes.begin(), sizes.end(), 0);
  const int n_max = *std::max_element(sizes.begin(), sizes.end());
  const bool up = dir == ShiftDirection::Up;
  const Eigen::RowVectorXd rr = column_maxima(r);

  // Per-group row maxima for the Q_k outer products.
  std::vector<Eigen::VectorXd> group_rowmax;
  {
    int off = 0;
    for (int s : sizes) {
      Eigen::VectorXd v(p);
      for (int i = 0; i < p; ++i) v(i) = r.block(i, off, 1, s).maxCoeff();
      group_rowmax.push_back(std::move(v));
      off += s;
    }
  }

  // beta coefficients as discs; start at lambda (up) or lambda - 1 (down).
  std::vector<ComplexDisc> beta(n_max);
  beta[0] = up ? ComplexDisc(lambda_hat) : shift(ComplexDisc(lambda_hat), -1.0);
  if (n_max > 1) beta[1] = ComplexDisc(1.0);

  const auto q_matrix = [&](const std::vector<ComplexDisc>& b) {
    Eigen::MatrixXd q(p, p);
    int off = 0, g = 0;
    for (int s : sizes) {
      // prefix sums of |beta_i| up to the group width
      Eigen::RowVectorXd w(s);
      double acc = 0.0;
      for (int i = 0; i < s; ++i) {
        acc = rnd::add_up(acc, i < static_cast<int>(b.size()) ? b[i].abs_up() : 0.0);
        w(i) = acc;
      }
      for (int i = 0; i < p; ++i)
        for (int c = 0; c < s; ++c) q(i, off + c) = rnd::mul_up(group_rowmax[g](i), w(c));
      off += s;
      ++g;
    }
    return q;
  };

  // M Rk realized as the upward row shift within each row group.
  const auto m_shift_rows = [&](const Eigen::MatrixXd& rk) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(p, p);
    int off = 0;
    for (int s : sizes) {
      for (int i = 0; i + 1 < s; ++i) out.row(off + i) = rk.row(off + i + 1);
      off += s;
    }
    return out;
  };

  const auto beta_step = [&](std::vector<ComplexDisc>& b, double sft) {
    const ComplexDisc f = shift(ComplexDisc(lambda_hat), sft);
    std::vector<ComplexDisc> nb(n_max);
    nb[0] = disc_mul(f, b[0]);
    for (int l = 1; l < n_max; ++l) nb[l] = disc_add(disc_mul(f, b[l]), b[l - 1]);
    b = std::move(nb);
  };

  Eigen::MatrixXd rk = r;
  for (int k = 0; k < m - 1; ++k) {
    const double sft = up ? static_cast<double>(k + 1) : -static_cast<double>(k + 2);
    const Eigen::MatrixXd q = q_matrix(beta);
    const Eigen::MatrixXd shifted = m_shift_rows(rk);
    rk = ar_radius_step(rk, Eigen::MatrixXd::Zero(p, p), rr, abs_shift_up(lambda_hat, sft), 0.0);
    for (int i = 0; i < p; ++i)
      for (int l = 0; l < p; ++l)
        rk(i, l) = rnd::add_up(rk(i, l), rnd::add_up(q(i, l), shifted(i, l)));
    beta_step(beta, sft);
    if (!(beta[0].abs_up() < 1e300)) throw EnclosureError("ar_product: coefficient overflow");
  }

  ArProduct out;
  out.c = Eigen::MatrixXcd::Zero(p, p);
  out.r = rk;
  int off = 0;
  for (int s : sizes) {
    for (int i = 0; i < s; ++i)
      for (int d = 0; i + d < s; ++d) {
        out.c(off + i, off + i + d) = beta[d].mid;
        out.r(off + i, off + i + d) = rnd::add_up(out.r(off + i, off + i + d), beta[d].rad);
      }
    off += s;
  }
  return out;
}

IntervalMatrix gamma_center_plus_delta(Complex lambda_hat, const std::vector<int>& sizes,
                                       const Eigen::MatrixXd& r) {
  IntervalMatrix center = gamma_block_center(lambda_hat, sizes);
  PerturbationDelta pd;
  pd.delta_1 = delta_impl(lambda_hat, r, sizes, NormKind::One);
  pd.delta_inf = delta_impl(lambda_hat, r, sizes, NormKind::Inf);
  const auto d = pd.delta();
  if (!d)
    throw EnclosureError("block gamma: no perturbation bound verifiable at the block center");
  for (Eigen::Index i = 0; i < center.rows(); ++i)
    for (Eigen::Index j = 0; j < center.cols(); ++j)
      center.rad(i, j) = rnd::add_up(center.rad(i, j), *d);
  return center;
}

namespace {

// Splits the ascending shifts 0..m-1 into stages whose scalar factor product
// stays far from overflow.
std::vector<std::pair<int, int>> stage_shifts(Complex lambda_hat, int m) {
  std::vector<std::pair<int, int>> stages;
  int start = 0;
  double logsum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double f = std::abs(lambda_hat + Complex{static_cast<double>(i), 0.0});
    logsum += std::log10(std::max(f, 1e-300));
    if (logsum > 140.0 || logsum < -140.0) {
      stages.emplace_back(start, i + 1);
      start = i + 1;
      logsum = 0.0;
    }
  }
  if (start < m) stages.emplace_back(start, m);
  return stages;
}

}  // namespace

IntervalMatrix enclose_block_gamma(const Block& blk) {
  const int p = blk.size();
  const Complex lh = blk.lambda_hat;

  if (p == 1) {
    const ComplexDisc z(lh, blk.R(0, 0));
    IntervalMatrix out(1, 1);
    // Large real parts reduce downward first: the jet quality at [1, 2) plus
    // an exact-center factor product beats the direct evaluation, whose H
    // cancellation grows with Re(z).
    const double re_lo = rnd::sub_down(z.mid.real(), z.rad);
    if (re_lo >= 3.0) {
      const int m = static_cast<int>(std::floor(re_lo)) - 1;
      const ComplexDisc zs = disc_sub(z, ComplexDisc(static_cast<double>(m)));
      const GammaJet jet = gamma_jet_auto(zs, 0);
      ComplexDisc prod(1.0);
      for (int i = 1; i <= m; ++i)
        prod = disc_mul(prod, disc_sub(z, ComplexDisc(static_cast<double>(i))));
      if (!(prod.abs_up() < 1e300))
        throw EnclosureError("block gamma: scalar reduction product overflow");
      out.set(0, 0, disc_mul(prod, jet.value()));
      return out;
    }
    const GammaJet jet = gamma_jet_auto(z, 0);
    out.set(0, 0, jet.value());
    return out;
  }

  const std::vector<int> sizes = blk.jordan_sizes.empty() ? unit_sizes(p) : blk.jordan_sizes;
  const bool jordan = !blk.jordan_sizes.empty() &&
                      std::any_of(sizes.begin(), sizes.end(), [](int s) { return s > 1; });
  const Bounds nmr_inf = norm_interval(blk.R, jordan ? sizes : std::vector<int>{}, NormKind::Inf);
  const Bounds nmr_one = norm_interval(blk.R, jordan ? sizes : std::vector<int>{}, NormKind::One);
  const bool pre_inf = rnd::sub_down(lh.real(), nmr_inf.hi) > 0.0;
  const bool pre_one = rnd::sub_down(lh.real(), nmr_one.hi) > 0.0;

  const auto product = [&](int m, ShiftDirection dir) {
    return jordan ? ar_product_jordan(lh, sizes, blk.R, m, dir)
                  : ar_product_spectral(lh, blk.R, m, dir);
  };
  const auto product_at = [&](Complex base, int m, ShiftDirection dir) {
    return jordan ? ar_product_jordan(base, sizes, blk.R, m, dir)
                  : ar_product_spectral(base, blk.R, m, dir);
  };

  try {
    // Operating window: the perturbation bound behaves well when
    // Re - ||M + R|| lands in roughly [1, 3); below 1 the omega term blows
    // up (reduce upward), at >= 3 the Gamma' term grows (reduce downward).
    const double t = rnd::sub_down(lh.real(), nmr_inf.hi);
    if (pre_inf && pre_one && t >= 1.0) {
      if (t >= 3.0) {
        const int m = select_m(lh, nmr_inf.hi, ShiftDirection::Down);
        if (m >= 1) {
          const Complex shifted = lh - Complex{static_cast<double>(m), 0.0};
          const IntervalMatrix gsh = gamma_center_plus_delta(shifted, sizes, blk.R);
          const ArProduct prod = product(m, ShiftDirection::Down);
          return mat_mul(prod.as_interval(), gsh);
        }
      }
      return gamma_center_plus_delta(lh, sizes, blk.R);
    }
    // Reduce upward; the shifted inf-norm argument lands in [1, 2).
    const int m = select_m(lh, nmr_inf.hi, ShiftDirection::Up);
    if (m < 1) throw EnclosureError("block gamma: inconsistent shift count");
    const Complex shifted = lh + Complex{static_cast<double>(m), 0.0};
    IntervalMatrix acc = gamma_center_plus_delta(shifted, sizes, blk.R);
    for (const auto& [from, to] : stage_shifts(lh, m)) {
      const Complex base = lh + Complex{static_cast<double>(from), 0.0};
      const ArProduct seg = product_at(base, to - from, ShiftDirection::Up);
      acc = verified_solve(seg.as_interval(), acc);
    }
    return acc;
  } catch (const VerificationError& e) {
    throw EnclosureError(std::string("block gamma: ") + e.what());
  } catch (const std::domain_error& e) {
    throw EnclosureError(std::string("block gamma: ") + e.what());
  }
}

}  // namespace vgamma
