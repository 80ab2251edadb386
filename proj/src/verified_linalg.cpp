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

#include "vgamma/verified_linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "vgamma/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vgamma {

namespace {

Eigen::VectorXd row_sums_up(const Eigen::MatrixXd& m) {
  Eigen::VectorXd out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) s = rnd::add_up(s, m(i, j));
    out(i) = s;
  }
  return out;
}

// Entrywise upper bound of the product of two nonnegative matrices: the
// floating product inflated by a gamma factor valid for any summation order.
Eigen::MatrixXd nonneg_product_upper(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double infl = 1.0 + rnd::gamma_factor(2 * static_cast<std::size_t>(a.cols()) + 8);
  const double eta = static_cast<double>(8 * a.cols() + 8) * rnd::kEta;
  return ((a * b) * infl).array() + eta;
}

}  // namespace

Eigen::MatrixXd Block::nilpotent() const {
  const int p = size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p, p);
  int off = 0;
  for (int s : jordan_sizes) {
    for (int i = 0; i + 1 < s; ++i) m(off + i, off + i + 1) = 1.0;
    off += s;
  }
  return m;
}

IntervalMatrix verified_solve(const IntervalMatrix& a, const IntervalMatrix& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("verified_solve: square matrix required");
  if (b.rows() != n) throw std::invalid_argument("verified_solve: dimension mismatch");
  if (!a.valid() || !b.valid()) throw VerificationError("verified_solve: invalid interval input");

  const Eigen::MatrixXcd r = a.mid.partialPivLu().inverse();
  if (!r.allFinite()) throw VerificationError("verified_solve: approximate inverse failed");
  const Eigen::MatrixXcd x0 = r * b.mid;
  const IntervalMatrix rint(r);

  const IntervalMatrix resid = sub(b, mat_mul(a, IntervalMatrix(x0)));
  const IntervalMatrix z = mat_mul(rint, resid);
  const IntervalMatrix g = sub(IntervalMatrix::identity(n), mat_mul(rint, a));
  const double gnorm = norm_bound(g, NormKind::Inf);
  if (!(gnorm < 1.0))
    throw VerificationError("verified_solve: contraction not verified (possibly singular)");

  // For every member, the error e solves e = z + G e. Entrywise:
  // |e| <= magZ + |G| magZ + |G|^2 |e|, with the quadratic tail bounded per
  // column by the uniform estimate colmax(magZ)/(1 - gnorm); the radius is
  // then z.rad + |G| |e|-bound, keeping mixed column scales decoupled.
  const Eigen::MatrixXd zmag = z.mag();
  const Eigen::MatrixXd gmag = g.mag();
  const Eigen::VectorXd grow2 = row_sums_up(nonneg_product_upper(gmag, gmag));
  const double denom = rnd::sub_down(1.0, gnorm);

  Eigen::MatrixXd ebound = zmag + nonneg_product_upper(gmag, zmag);
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    double colmax = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) colmax = std::max(colmax, zmag(i, j));
    const double amp = rnd::div_up(colmax, denom);
    for (Eigen::Index i = 0; i < n; ++i)
      ebound(i, j) = rnd::add_up(ebound(i, j), rnd::mul_up(grow2(i), amp));
  }
  const Eigen::MatrixXd gtail = nonneg_product_upper(gmag, ebound);

  IntervalMatrix out(n, b.cols());
  out.mid = x0 + z.mid;
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      double rad = rnd::add_up(z.rad(i, j), gtail(i, j));
      rad = rnd::add_up(rad, detail::cerr1(out.mid(i, j)));
      out.rad(i, j) = rad;
    }
  if (!out.valid()) throw VerificationError("verified_solve: non-finite enclosure");
  return out;
}

bool verify_nonsingular(const IntervalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("verify_nonsingular: square required");
  if (!a.valid()) return false;
  const Eigen::MatrixXcd r = a.mid.partialPivLu().inverse();
  if (!r.allFinite()) return false;
  const IntervalMatrix g = sub(IntervalMatrix::identity(a.rows()), mat_mul(IntervalMatrix(r), a));
  return norm_bound(g, NormKind::Inf) < 1.0;
}

std::vector<std::vector<int>> cluster_eigenvalues(const std::vector<Complex>& lambda,
                                                  const std::vector<double>& radii,
                                                  double kappa, double tau) {
  const int n = static_cast<int>(lambda.size());
  if (radii.size() != lambda.size())
    throw std::invalid_argument("cluster_eigenvalues: length mismatch");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<double> rho(n);
  for (int i = 0; i < n; ++i) rho[i] = kappa * radii[i] + tau;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(lambda[i] - lambda[j]) <= rho[i] + rho[j]) {
        const int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<int>> groups;
  std::vector<int> root_to_group(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_to_group[r] < 0) {
      root_to_group[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[root_to_group[r]].push_back(i);
  }
  return groups;
}

namespace {

// ---------------------------------------------------------------------------
// Shared verification core. The spectral and Jordan variants differ only in
// how the basis and the per-cluster nilpotent structure are produced; both
// end up here with cluster-contiguous columns.

struct ClusterLayout {
  int offset = 0;
  int p = 0;
  Complex lambda_hat{0.0, 0.0};
  std::vector<int> sizes;  // empty => spectral (M = 0)
};

// Rigorous enclosure of B = X^{-1} A X for the exact inverse of the floating
// basis X; also certifies X nonsingular.
IntervalMatrix transformed_enclosure(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& x) {
  const Eigen::Index n = a.rows();
  if (!x.allFinite()) throw VerificationError("vbd: basis not finite");
  const Eigen::MatrixXcd y = x.partialPivLu().inverse();
  if (!y.allFinite())
    throw VerificationError("vbd: basis nonsingularity not verified");
  const IntervalMatrix g = sub(IntervalMatrix::identity(n), mat_mul_accurate(y, x));
  const double gamma = norm_bound(g, NormKind::Inf);
  if (!(gamma < 1.0)) throw VerificationError("vbd: basis nonsingularity not verified");
  // T = Y (A X) with compensated midpoint products; the inner product's small
  // radii pass through |Y|.
  const IntervalMatrix ax = mat_mul_accurate(a, x);
  IntervalMatrix t = mat_mul_accurate(y, ax.mid);
  {
    const Eigen::MatrixXd ymag = IntervalMatrix(y).mag();
    const Eigen::MatrixXd extra = nonneg_product_upper(ymag, ax.rad);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) t.rad(i, j) = rnd::add_up(t.rad(i, j), extra(i, j));
  }
  // B = T + G B, so |B| <= magT + |G| magT + |G|^2 |B| with the tail bounded
  // through the uniform entry estimate beta; the radius adds |G| |B|-bound
  // entrywise rather than a uniform row fill-in.
  const double beta = rnd::div_up(norm_bound(t, NormKind::Inf), rnd::sub_down(1.0, gamma));
  const Eigen::MatrixXd tmag = t.mag();
  const Eigen::MatrixXd gmag = g.mag();
  const Eigen::VectorXd grow2 = row_sums_up(nonneg_product_upper(gmag, gmag));
  Eigen::MatrixXd bbound = tmag + nonneg_product_upper(gmag, tmag);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double tail = rnd::mul_up(grow2(i), rnd::div_up(beta, rnd::sub_down(1.0, gamma)));
    for (Eigen::Index j = 0; j < n; ++j) bbound(i, j) = rnd::add_up(bbound(i, j), tail);
  }
  const Eigen::MatrixXd gtail = nonneg_product_upper(gmag, bbound);
  IntervalMatrix b = t;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b.rad(i, j) = rnd::add_up(b.rad(i, j), gtail(i, j));
  return b;
}

// Structured preconditioner for one cluster's Krawczyk system: -1 on the
// cluster's own rows, and on each foreign cluster the exact banded inverse of
// (lambda_c - lambda_j) I + M_c, applied sub-block by sub-block.
struct Precond {
  struct ForeignBlock {
    int offset;
    int size;
    std::vector<Complex> coef;  // coef[t] = (-1)^t d^{-(t+1)}
  };
  int cluster_offset = 0;
  int cluster_size = 0;
  std::vector<ForeignBlock> foreign;

  IntervalMatrix apply(const IntervalMatrix& v) const {
    IntervalMatrix out(v.rows(), v.cols());
    for (Eigen::Index col = 0; col < v.cols(); ++col) {
      for (int r = cluster_offset; r < cluster_offset + cluster_size; ++r)
        out.set(r, col, -v(r, col));
      for (const auto& fb : foreign)
        for (int i = 0; i < fb.size; ++i) {
          ComplexDisc s;
          for (int t = 0; i + t < fb.size; ++t)
            s = disc_add(s, disc_mul(ComplexDisc(fb.coef[t]), v(fb.offset + i + t, col)));
          out.set(fb.offset + i, col, s);
        }
    }
    return out;
  }
};

Precond make_precond(const std::vector<ClusterLayout>& layout, int j) {
  Precond pc;
  pc.cluster_offset = layout[j].offset;
  pc.cluster_size = layout[j].p;
  for (int c = 0; c < static_cast<int>(layout.size()); ++c) {
    if (c == j) continue;
    const Complex d = layout[c].lambda_hat - layout[j].lambda_hat;
    if (!(std::abs(d) > 0.0)) throw VerificationError("vbd: coincident cluster centers");
    const std::vector<int> sizes =
        layout[c].sizes.empty() ? std::vector<int>(layout[c].p, 1) : layout[c].sizes;
    int off = layout[c].offset;
    for (int s : sizes) {
      Precond::ForeignBlock fb;
      fb.offset = off;
      fb.size = s;
      fb.coef.resize(s);
      Complex acc = Complex{1.0, 0.0} / d;
      for (int t = 0; t < s; ++t) {
        fb.coef[t] = acc;
        acc = -acc / d;
      }
      pc.foreign.push_back(std::move(fb));
      off += s;
    }
  }
  return pc;
}

IntervalMatrix extract_e(const IntervalMatrix& u, int off, int p) {
  IntervalMatrix e = u;
  for (int r = off; r < off + p; ++r)
    for (Eigen::Index col = 0; col < u.cols(); ++col) e.set(r, col, ComplexDisc());
  return e;
}

// Column shift by the nilpotent structure: out(:, l) = e(:, l-1) within each
// Jordan sub-block (realizes E M without a matrix product).
IntervalMatrix shift_columns(const IntervalMatrix& e, const std::vector<int>& sizes) {
  IntervalMatrix out(e.rows(), e.cols());
  int off = 0;
  for (int s : sizes) {
    for (int l = 1; l < s; ++l)
      for (Eigen::Index r = 0; r < e.rows(); ++r) out.set(r, off + l, e(r, off + l - 1));
    off += s;
  }
  return out;
}

struct ClusterResult {
  IntervalMatrix e;  // n x p, cluster rows zero
  IntervalMatrix c;  // p x p
};

// Krawczyk fixed point for one cluster of the transformed system.
std::optional<ClusterResult> verify_cluster(const IntervalMatrix& b,
                                            const std::vector<ClusterLayout>& layout, int j) {
  const Eigen::Index n = b.rows();
  const ClusterLayout& cl = layout[j];
  const int off = cl.offset, p = cl.p;
  const std::vector<int> sizes = cl.sizes.empty() ? std::vector<int>(p, 1) : cl.sizes;
  const bool has_m = !cl.sizes.empty();
  Precond pc;
  try {
    pc = make_precond(layout, j);
  } catch (const VerificationError&) {
    return std::nullopt;
  }

  // Psi = (B - lambda I) with the cluster columns replaced by -e_{I_k}.
  IntervalMatrix psi = b;
  for (Eigen::Index i = 0; i < n; ++i) {
    const ComplexDisc d = psi(i, i);
    const Complex m = d.mid - cl.lambda_hat;
    psi.set(i, i, ComplexDisc(m, rnd::add_up(d.rad, detail::cerr1(m))));
  }
  for (int k = 0; k < p; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) psi.set(i, off + k, ComplexDisc());
    psi.set(off + k, off + k, ComplexDisc(-1.0));
  }
  const IntervalMatrix g = sub(IntervalMatrix::identity(n), pc.apply(psi));

  // F0 = B(:, cluster) - lambda V0 - V0 M.
  IntervalMatrix f0 = b.block(0, off, n, p);
  for (int l = 0; l < p; ++l) {
    const ComplexDisc d = f0(off + l, l);
    const Complex m = d.mid - cl.lambda_hat;
    f0.set(off + l, l, ComplexDisc(m, rnd::add_up(d.rad, detail::cerr1(m))));
  }
  if (has_m) {
    int boff = 0;
    for (int s : sizes) {
      for (int l = 1; l < s; ++l) {
        const ComplexDisc d = f0(off + boff + l - 1, boff + l);
        const Complex m = d.mid - 1.0;
        f0.set(off + boff + l - 1, boff + l,
               ComplexDisc(m, rnd::add_up(d.rad, detail::cerr1(m))));
      }
      boff += s;
    }
  }
  const IntervalMatrix rf0 = pc.apply(f0);

  const auto eval_k = [&](const IntervalMatrix& x) {
    const IntervalMatrix e = extract_e(x, off, p);
    const IntervalMatrix c = x.block(off, 0, p, p);
    IntervalMatrix k = add(mat_mul(g, x), pc.apply(mat_mul(e, c)));
    if (has_m) k = add(k, pc.apply(shift_columns(e, sizes)));
    for (int col = 0; col < p; ++col)
      for (Eigen::Index r = 0; r < n; ++r) k.set(r, col, disc_sub(k(r, col), rf0(r, col)));
    return k;
  };

  IntervalMatrix y(n, p);
  for (int col = 0; col < p; ++col)
    for (Eigen::Index r = 0; r < n; ++r) y.set(r, col, -rf0(r, col));
  for (int iter = 0; iter < 15; ++iter) {
    // epsilon-inflation
    IntervalMatrix x = y;
    for (int col = 0; col < p; ++col)
      for (Eigen::Index r = 0; r < n; ++r) {
        const ComplexDisc d = x(r, col);
        const double tiny =
            4.0 * rnd::kUnit * (rnd::cabs_up(d.mid.real(), d.mid.imag()) + 1e-280);
        x.set(r, col, ComplexDisc(d.mid, rnd::add_up(rnd::mul_up(d.rad, 1.1), tiny)));
      }
    IntervalMatrix k = eval_k(x);

    bool inside = k.valid();
    for (int col = 0; col < p && inside; ++col)
      for (Eigen::Index r = 0; r < n && inside; ++r) {
        const ComplexDisc kk = k(r, col), xx = x(r, col);
        const Complex dm = kk.mid - xx.mid;
        inside = rnd::add_up(rnd::cabs_up(dm.real(), dm.imag()), kk.rad) < xx.rad;
      }
    if (inside) {
      // One uninflated refinement pass tightens the enclosure further; the
      // solution stays inside since it is a fixed point of the map.
      const IntervalMatrix refined = eval_k(k);
      if (refined.valid()) k = refined;
      ClusterResult res;
      res.e = extract_e(k, off, p);
      res.c = k.block(off, 0, p, p);
      return res;
    }
    y = k;
    if (!y.valid()) return std::nullopt;
  }
  return std::nullopt;
}

// Spectrum disc radius around lambda_hat for P = lambda I + M + C: any
// eigenvalue at distance d satisfies sum_{t=1..m} q/d^t >= 1 (resolvent
// bound), so r = max(nu, nu^(1/m)) with nu = 1.01 m q excludes the rest.
double spectrum_radius(const Eigen::MatrixXd& cmag, int n_max) {
  const IntervalMatrix tmp(Eigen::MatrixXcd::Zero(cmag.rows(), cmag.cols()), cmag);
  const double q = std::min(norm_bound(tmp, NormKind::One), norm_bound(tmp, NormKind::Inf));
  if (q == 0.0) return 0.0;
  const double nu = rnd::mul_up(1.01 * static_cast<double>(n_max), q);
  if (n_max <= 1) return nu;
  const double root = pow(Bounds(nu), Bounds(1.0) / Bounds(static_cast<double>(n_max))).hi;
  return std::max(nu, root);
}

VbdResult assemble_vbd(const Eigen::MatrixXcd& xp, const std::vector<ClusterLayout>& layout,
                       std::vector<ClusterResult>& results) {
  const Eigen::Index n = xp.rows();
  IntervalMatrix v = IntervalMatrix::identity(n);
  for (std::size_t j = 0; j < layout.size(); ++j) {
    const ClusterLayout& cl = layout[j];
    const IntervalMatrix& e = results[j].e;
    for (int col = 0; col < cl.p; ++col)
      for (Eigen::Index r = 0; r < n; ++r) {
        if (r >= cl.offset && r < cl.offset + cl.p) continue;  // normalization rows stay exact
        v.set(r, cl.offset + col, e(r, col));
      }
  }
  {
    IntervalMatrix voff = v;
    for (Eigen::Index i = 0; i < n; ++i) voff.set(i, i, disc_sub(voff(i, i), ComplexDisc(1.0)));
    if (!(norm_bound(voff, NormKind::Inf) < 1.0))
      throw VerificationError("vbd: basis correction too large, nonsingularity not verified");
  }

  VbdResult out;
  out.w = mat_mul(IntervalMatrix(xp), v);
  if (!out.w.valid()) throw VerificationError("vbd: non-finite basis enclosure");

  for (std::size_t j = 0; j < layout.size(); ++j) {
    const ClusterLayout& cl = layout[j];
    Block blk;
    blk.indices.resize(cl.p);
    std::iota(blk.indices.begin(), blk.indices.end(), cl.offset);
    blk.lambda_hat = cl.lambda_hat;
    blk.jordan_sizes = cl.sizes;
    blk.R = results[j].c.mag();
    const int n_max = cl.sizes.empty() ? 1 : *std::max_element(cl.sizes.begin(), cl.sizes.end());
    blk.r_spec = spectrum_radius(blk.R, n_max);
    blk.basis = out.w.block(0, cl.offset, n, cl.p);
    out.spectrum_discs.emplace_back(blk.lambda_hat, blk.r_spec);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

// Per-cluster verification over a fixed layout; throws on any failure.
VbdResult verify_layout(const Eigen::MatrixXcd& xp, const IntervalMatrix& bp,
                        const std::vector<ClusterLayout>& layout) {
  std::vector<ClusterResult> results(layout.size());
  std::vector<char> ok(layout.size(), 0);
  const int nthreads = par::max_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) \
    if (nthreads > 1 && layout.size() > 1)
#endif
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(layout.size()); ++j) {
    auto res = verify_cluster(bp, layout, static_cast<int>(j));
    if (res) {
      results[j] = std::move(*res);
      ok[j] = 1;
    }
  }
  if (std::find(ok.begin(), ok.end(), 0) != ok.end())
    throw VerificationError("vbd: cluster verification failed");
  return assemble_vbd(xp, layout, results);
}

Complex cluster_mean(const std::vector<Complex>& lambda, const std::vector<int>& idx) {
  Complex s{0.0, 0.0};
  for (int i : idx) s += lambda[i];
  return s / static_cast<double>(idx.size());
}

double max_abs(const Eigen::MatrixXcd& a) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

}  // namespace

VbdResult vbd_spectral(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("vbd_spectral: square matrix required");
  if (!a.allFinite()) throw std::invalid_argument("vbd_spectral: non-finite input");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, true);
  if (es.info() != Eigen::Success)
    throw VerificationError("vbd_spectral: eigensolver did not converge");
  const Eigen::MatrixXcd x = es.eigenvectors();
  std::vector<Complex> lambda(n);
  for (Eigen::Index i = 0; i < n; ++i) lambda[i] = es.eigenvalues()(i);

  const IntervalMatrix b = transformed_enclosure(a, x);
  const Eigen::MatrixXd bmag = b.mag();
  std::vector<double> radii(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double s = b.rad(i, i);
    for (Eigen::Index k = 0; k < n; ++k)
      if (k != i) s = rnd::add_up(s, bmag(i, k));
    radii[i] = s;
  }
  const double tau = 1e3 * rnd::kUnit * max_abs(a) * static_cast<double>(n);

  double kappa = 10.0;
  for (int attempt = 0; attempt < 4; ++attempt, kappa *= 2.0) {
    const auto groups = cluster_eigenvalues(lambda, radii, kappa, tau);
    std::vector<int> perm;
    perm.reserve(n);
    for (const auto& gset : groups) perm.insert(perm.end(), gset.begin(), gset.end());

    Eigen::MatrixXcd xp(n, n);
    IntervalMatrix bp(n, n);
    for (Eigen::Index jc = 0; jc < n; ++jc) xp.col(jc) = x.col(perm[jc]);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index jc = 0; jc < n; ++jc) {
        bp.mid(i, jc) = b.mid(perm[i], perm[jc]);
        bp.rad(i, jc) = b.rad(perm[i], perm[jc]);
      }

    std::vector<ClusterLayout> layout(groups.size());
    int off = 0;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      layout[j].offset = off;
      layout[j].p = static_cast<int>(groups[j].size());
      layout[j].lambda_hat = cluster_mean(lambda, groups[j]);
      off += layout[j].p;
    }
    try {
      return verify_layout(xp, bp, layout);
    } catch (const VerificationError&) {
      if (attempt == 3) throw;
    }
  }
  throw VerificationError("vbd_spectral: cluster verification failed after retries");
}

// ---------------------------------------------------------------------------
// Numerical Jordan decomposition: Schur form, unitary reordering into
// contiguous clusters, block diagonalization by triangular Sylvester solves,
// then staircase chains per cluster.

namespace {

// Swap adjacent diagonal entries t(k), t(k+1) of upper-triangular t by a
// unitary similarity, accumulating into q.
void swap_adjacent(Eigen::MatrixXcd& t, Eigen::MatrixXcd& q, Eigen::Index k) {
  const Eigen::Index n = t.rows();
  const Complex a = t(k, k), bq = t(k, k + 1), d = t(k + 1, k + 1);
  // eigenvector of [[a, b], [0, d]] for eigenvalue d is (b, d - a)
  const Complex v0 = bq, v1 = d - a;
  const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
  if (!(nrm > 0.0)) return;  // identical entries, nothing to do
  const Complex c0 = v0 / nrm, c1 = v1 / nrm;
  Eigen::Matrix2cd rot;
  rot << c0, -std::conj(c1), c1, std::conj(c0);
  t.block(k, 0, 2, n) = rot.adjoint() * t.block(k, 0, 2, n);
  t.block(0, k, n, 2) = t.block(0, k, n, 2) * rot;
  q.block(0, k, n, 2) = q.block(0, k, n, 2) * rot;
  t(k + 1, k) = Complex{0.0, 0.0};
}

// Solve T11 Y - Y T22 = -C with T11, T22 upper triangular (columnwise back
// substitution).
Eigen::MatrixXcd sylvester_tri(const Eigen::MatrixXcd& t11, const Eigen::MatrixXcd& t22,
                               const Eigen::MatrixXcd& c) {
  const Eigen::Index p = t11.rows(), q = t22.rows();
  Eigen::MatrixXcd y(p, q);
  for (Eigen::Index j = 0; j < q; ++j) {
    Eigen::VectorXcd rhs = -c.col(j);
    for (Eigen::Index k = 0; k < j; ++k) rhs += y.col(k) * t22(k, j);
    Eigen::MatrixXcd m = t11;
    for (Eigen::Index i = 0; i < p; ++i) m(i, i) -= t22(j, j);
    y.col(j) = m.triangularView<Eigen::Upper>().solve(rhs);
  }
  return y;
}

// Jordan structure of the shifted cluster block nn = T_c - lambda I by Weyr
// nullities of powers (SVD ranks at the absolute tolerance).
std::vector<int> staircase_sizes(const Eigen::MatrixXcd& nn, double tol) {
  const int p = static_cast<int>(nn.rows());
  std::vector<int> nullity{0};
  Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(p, p);
  for (int k = 1; k <= p; ++k) {
    pw = pw * nn;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pw);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > tol) ++rank;
    nullity.push_back(p - rank);
    if (p - rank == p) break;
  }
  while (nullity.back() < p) nullity.push_back(nullity.back());  // defensive saturation
  std::vector<int> blocks_ge(nullity.size());
  for (std::size_t k = 1; k < nullity.size(); ++k) blocks_ge[k] = nullity[k] - nullity[k - 1];
  std::vector<int> sizes;
  for (std::size_t k = 1; k < blocks_ge.size(); ++k) {
    const int exact =
        blocks_ge[k] - (k + 1 < blocks_ge.size() ? blocks_ge[k + 1] : 0);
    for (int c = 0; c < exact; ++c) sizes.push_back(static_cast<int>(k));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

// Generalized-eigenvector chains realizing T_c Z = Z (lambda I + M) for the
// detected (or hinted) sizes. Chain tops are picked from ker(N^k) directions
// orthogonal to ker(N^{k-1}) and to the already chosen chains.
Eigen::MatrixXcd jordan_chains(const Eigen::MatrixXcd& nn, const std::vector<int>& sizes,
                               double tol) {
  const int p = static_cast<int>(nn.rows());
  const int m = sizes.empty() ? 0 : sizes.front();
  std::vector<Eigen::MatrixXcd> kerbases(m + 1);  // orthonormal kernel bases
  Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(p, p);
  kerbases[0] = Eigen::MatrixXcd::Zero(p, 0);
  for (int k = 1; k <= m; ++k) {
    pw = pw * nn;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pw, Eigen::ComputeFullV);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > tol) ++rank;
    kerbases[k] = svd.matrixV().rightCols(p - rank);
  }

  std::vector<std::vector<Eigen::VectorXcd>> chains;
  Eigen::MatrixXcd used(p, 0);  // orthonormal basis of chosen directions (all levels)
  auto orth_append = [&](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd w = v;
    for (Eigen::Index c = 0; c < used.cols(); ++c) w -= used.col(c).dot(w) * used.col(c);
    const double nw = w.norm();
    if (nw > 1e-12) {
      used.conservativeResize(p, used.cols() + 1);
      used.col(used.cols() - 1) = w / nw;
    }
  };

  for (int k = m; k >= 1; --k) {
    const int want = static_cast<int>(std::count(sizes.begin(), sizes.end(), k));
    if (want == 0) continue;
    // candidates: ker(N^k) minus ker(N^{k-1}) minus already used directions
    Eigen::MatrixXcd cand = kerbases[k];
    Eigen::MatrixXcd avoid(p, kerbases[k - 1].cols() + used.cols());
    avoid << kerbases[k - 1], used;
    Eigen::MatrixXcd proj = cand;
    for (Eigen::Index c = 0; c < avoid.cols(); ++c) {
      const Eigen::VectorXcd u = avoid.col(c).normalized();
      proj -= u * (u.adjoint() * proj);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(proj, Eigen::ComputeFullU);
    for (int t = 0; t < want; ++t) {
      const Eigen::VectorXcd top = svd.matrixU().col(t);
      std::vector<Eigen::VectorXcd> chain(k);
      chain[k - 1] = top;
      for (int i = k - 1; i >= 1; --i) chain[i - 1] = nn * chain[i];
      double scale = 0.0;
      for (const auto& v : chain) scale = std::max(scale, v.lpNorm<Eigen::Infinity>());
      for (auto& v : chain) v /= scale;
      for (const auto& v : chain) orth_append(v);
      chains.push_back(std::move(chain));
    }
  }
  // Order chains by length descending to match the sizes list.
  std::stable_sort(chains.begin(), chains.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  Eigen::MatrixXcd z(p, p);
  int col = 0;
  for (const auto& chain : chains)
    for (const auto& v : chain) z.col(col++) = v;
  if (col != p) throw VerificationError("vbd_jordan: chain construction incomplete");
  return z;
}

}  // namespace

VbdResult vbd_jordan(const Eigen::MatrixXcd& a, const std::vector<int>& hint) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("vbd_jordan: square matrix required");
  if (!a.allFinite()) throw std::invalid_argument("vbd_jordan: non-finite input");
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(a, true);
  if (schur.info() != Eigen::Success)
    throw VerificationError("vbd_jordan: Schur decomposition did not converge");

  const double rank_tol = 1e-8 * a.norm();  // Frobenius upper-bounds the 2-norm
  const double tau = 1e3 * rnd::kUnit * max_abs(a) * static_cast<double>(n);

  // Eigenvalues of a perturbed Jordan block of size m scatter like
  // (u ||A||)^(1/m), far beyond the rank tolerance, so the clustering radius
  // escalates through those scales until the verified radii become small.
  const double ubase = rnd::kUnit * (1.0 + a.norm());
  std::vector<double> radius_schedule{rank_tol};
  for (int k = 1; k <= 3; ++k)
    radius_schedule.push_back(
        std::max(rank_tol, std::pow(ubase, 1.0 / static_cast<double>(1 << k))));

  VbdResult best;
  double best_quality = std::numeric_limits<double>::infinity();
  bool have_result = false;
  bool hint_mismatch = false;
  std::string last_error = "vbd_jordan: verification failed";

  for (int attempt = 0; attempt < 4; ++attempt) {
    const double kappa = 10.0;
    const double cluster_radius = radius_schedule[attempt];
    Eigen::MatrixXcd t = schur.matrixT();
    Eigen::MatrixXcd q = schur.matrixU();

    std::vector<Complex> diag(n);
    for (Eigen::Index i = 0; i < n; ++i) diag[i] = t(i, i);
    const auto groups =
        cluster_eigenvalues(diag, std::vector<double>(n, cluster_radius), kappa, tau);

    // Bubble the desired order into place with unitary adjacent swaps.
    std::vector<int> target;
    target.reserve(n);
    for (const auto& gset : groups) target.insert(target.end(), gset.begin(), gset.end());
    std::vector<int> pos(n);  // current position of original index
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<int> at(n);  // original index at position
    std::iota(at.begin(), at.end(), 0);
    for (Eigen::Index dst = 0; dst < n; ++dst) {
      const int want = target[dst];
      for (int cur = pos[want]; cur > dst; --cur) {
        swap_adjacent(t, q, cur - 1);
        std::swap(at[cur - 1], at[cur]);
        pos[at[cur - 1]] = static_cast<int>(cur - 1);
        pos[at[cur]] = static_cast<int>(cur);
      }
    }

    // Block-diagonalize t across clusters.
    std::vector<int> offs(groups.size() + 1, 0);
    for (std::size_t j = 0; j < groups.size(); ++j)
      offs[j + 1] = offs[j] + static_cast<int>(groups[j].size());
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(n, n);
    bool sylvester_ok = true;
    for (std::size_t bj = 1; bj < groups.size() && sylvester_ok; ++bj) {
      for (std::ptrdiff_t bi = static_cast<std::ptrdiff_t>(bj) - 1; bi >= 0; --bi) {
        const int oi = offs[bi], pi = offs[bi + 1] - offs[bi];
        const int oj = offs[bj], pj = offs[bj + 1] - offs[bj];
        const Eigen::MatrixXcd y = sylvester_tri(t.block(oi, oi, pi, pi),
                                                 t.block(oj, oj, pj, pj),
                                                 t.block(oi, oj, pi, pj));
        if (!y.allFinite()) {
          sylvester_ok = false;
          break;
        }
        // T <- (I - YE) T (I + YE); only row block bi and column block bj move.
        t.block(oi, oj, pi, pj).setZero();
        for (std::size_t bk = bj + 1; bk < groups.size(); ++bk)
          t.block(oi, offs[bk], pi, offs[bk + 1] - offs[bk]) -=
              y * t.block(oj, offs[bk], pj, offs[bk + 1] - offs[bk]);
        for (std::ptrdiff_t bk = 0; bk <= bi; ++bk)
          t.block(offs[bk], oj, offs[bk + 1] - offs[bk], pj) +=
              t.block(offs[bk], oi, offs[bk + 1] - offs[bk], pi) * y;
        s.block(0, oj, n, pj) += s.block(0, oi, n, pi) * y;
      }
    }
    if (!sylvester_ok) continue;

    // Per-cluster staircase and chains.
    std::vector<ClusterLayout> layout(groups.size());
    Eigen::MatrixXcd zblocks = Eigen::MatrixXcd::Zero(n, n);
    bool chains_ok = true;
    std::size_t hint_pos = 0;
    for (std::size_t j = 0; j < groups.size() && chains_ok; ++j) {
      const int off = offs[j], p = offs[j + 1] - offs[j];
      Complex lam{0.0, 0.0};
      for (int i = 0; i < p; ++i) lam += t(off + i, off + i);
      lam /= static_cast<double>(p);
      Eigen::MatrixXcd nnmat = t.block(off, off, p, p);
      for (int i = 0; i < p; ++i) nnmat(i, i) -= lam;

      std::vector<int> sizes;
      if (!hint.empty()) {
        int got = 0;
        while (got < p && hint_pos < hint.size()) {
          sizes.push_back(hint[hint_pos]);
          got += hint[hint_pos++];
        }
        if (got != p) {
          hint_mismatch = true;
          chains_ok = false;
          break;
        }
        std::sort(sizes.rbegin(), sizes.rend());
      } else {
        sizes = staircase_sizes(nnmat, rank_tol);
        if (std::accumulate(sizes.begin(), sizes.end(), 0) != p) {
          chains_ok = false;
          break;
        }
      }
      layout[j].offset = off;
      layout[j].p = p;
      layout[j].lambda_hat = lam;
      const bool trivial = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; });
      layout[j].sizes = sizes;
      try {
        zblocks.block(off, off, p, p) =
            trivial ? Eigen::MatrixXcd::Identity(p, p) : jordan_chains(nnmat, sizes, rank_tol);
      } catch (const VerificationError&) {
        chains_ok = false;
      }
    }
    if (!chains_ok) continue;

    const Eigen::MatrixXcd z = q * s * zblocks;
    try {
      const IntervalMatrix b = transformed_enclosure(a, z);
      VbdResult cand = verify_layout(z, b, layout);
      double quality = 0.0;
      for (const auto& blk : cand.blocks) quality = std::max(quality, blk.R.maxCoeff());
      if (quality < best_quality) {
        best = std::move(cand);
        best_quality = quality;
        have_result = true;
      }
      // Small radii mean the structure resolved cleanly; no need to merge
      // further. Otherwise keep escalating and keep the best result seen.
      if (best_quality <= 1e-7 * (1.0 + max_abs(a))) return best;
    } catch (const VerificationError& e) {
      last_error = e.what();
    }
  }
  if (have_result) return best;
  if (hint_mismatch)
    throw std::invalid_argument("vbd_jordan: hint sizes do not partition the clusters");
  throw VerificationError(last_error);
}

}  // namespace vgamma
