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

#include "vgamma/scalar_gamma.hpp"

#include <cmath>
#include <limits>

namespace vgamma {

namespace {

Bounds factorial_bounds(int n) {
  Bounds f(1.0);
  for (int i = 2; i <= n; ++i) f = f * Bounds(static_cast<double>(i));
  return f;
}

ComplexDisc disc_from_real(const Bounds& b) {
  const RealInterval r = RealInterval::from_bounds(b);
  return {Complex{r.mid, 0.0}, r.rad};
}

// z + s for an exactly representable real shift s.
ComplexDisc shift(const ComplexDisc& z, double s) {
  return disc_add(z, ComplexDisc(s));
}

bool is_half_integer_param(double a) {
  const double b = a - 0.5;
  return b == std::floor(b) && b >= 3.0 && b <= 60.0;
}

}  // namespace

SpougeContext make_spouge_context(double a) {
  if (!is_half_integer_param(a))
    throw std::domain_error("make_spouge_context: a must be b + 1/2 with integer b in [3, 60]");
  SpougeContext ctx;
  ctx.a = a;
  const int terms = static_cast<int>(std::lround(a + 0.5));  // ceil(a) = b + 1
  ctx.c.reserve(terms);
  ctx.c.push_back(ComplexDisc(1.0));  // c_0 = 1 exactly
  const Bounds sq2pi = sqrt(Bounds(2.0) * consts::pi());
  for (int k = 1; k <= terms - 1; ++k) {
    const double base = a - static_cast<double>(k);  // >= 1/2, exact
    // (a-k)^(k-1/2) e^(a-k) evaluated as one exponential to keep it tight.
    const double expo_half = static_cast<double>(k) - 0.5;  // exact
    const Bounds mag = exp(Bounds(expo_half) * log(Bounds(base)) + Bounds(base)) /
                       (factorial_bounds(k - 1) * sq2pi);
    ctx.c.push_back(disc_from_real((k - 1) % 2 == 0 ? mag : -mag));
  }
  return ctx;
}

double xi_bound(int m, const ComplexDisc& z, double a) {
  if (a < 3.0) throw std::domain_error("xi_bound: requires a >= 3");
  const Bounds d = Bounds(z.mid.real()) - Bounds(z.rad) - Bounds(1.0) + Bounds(a);
  if (!(d.lo > 0.0)) throw std::domain_error("xi_bound: Re(z) - rad - 1 + a must be positive");
  const Bounds e = exp(Bounds(1.0));
  const Bounds num = factorial_bounds(m) * sqrt(Bounds(a) * e / consts::pi());
  const Bounds den = pow_int(d, m + 1) * pow(Bounds(2.0) * consts::pi(), Bounds(a) + Bounds(0.5));
  return (num / den).hi;
}

std::vector<ComplexDisc> h_derivatives(const ComplexDisc& z, const SpougeContext& ctx, int l) {
  if (l < 0) throw std::invalid_argument("h_derivatives: negative order");
  std::vector<ComplexDisc> out(l + 1);
  out[0] = ctx.c[0];
  try {
    for (int k = 1; k < ctx.term_count(); ++k) {
      const ComplexDisc w = disc_inv(shift(z, static_cast<double>(k - 1)));
      ComplexDisc acc = disc_mul(ctx.c[k], w);
      out[0] = disc_add(out[0], acc);
      for (int j = 1; j <= l; ++j) {
        acc = disc_mul(acc, w);
        out[j] = disc_add(out[j], j % 2 == 0 ? acc : -acc);
      }
    }
  } catch (const std::domain_error&) {
    throw EnclosureError("h_derivatives: a z - 1 + k disc contains a pole");
  }
  return out;
}

std::vector<ComplexDisc> p_derivatives(const ComplexDisc& z, double a, int l) {
  if (l < 0) throw std::invalid_argument("p_derivatives: negative order");
  const ComplexDisc w = shift(z, a - 1.0);
  if (!(rnd::sub_down(w.mid.real(), w.rad) > 0.0))
    throw std::domain_error("p_derivatives: Re(z) - rad - 1 + a must be positive");
  const double half_shift = a - 0.5;  // = b, exact
  std::vector<ComplexDisc> out(l + 1);
  const ComplexDisc winv = disc_inv(w);
  out[0] = disc_sub(elem_log(w), disc_mul(ComplexDisc(half_shift), winv));
  ComplexDisc wpow = winv;
  for (int j = 1; j <= l; ++j) {
    ComplexDisc term = disc_add(disc_div(wpow, ComplexDisc(static_cast<double>(j))),
                                disc_mul(ComplexDisc(half_shift), disc_mul(wpow, winv)));
    out[j] = (j % 2 == 1) ? term : -term;
    wpow = disc_mul(wpow, winv);
  }
  return out;
}

std::vector<ComplexDisc> k_derivatives(const ComplexDisc& z, double a, int l,
                                       const std::vector<ComplexDisc>& p_jet) {
  if (l < 0) throw std::invalid_argument("k_derivatives: negative order");
  if (static_cast<int>(p_jet.size()) < l)
    throw std::invalid_argument("k_derivatives: p_jet too short");
  const ComplexDisc w = shift(z, a - 1.0);
  const ComplexDisc expo = shift(z, -0.5);
  // K(z) = sqrt(2 pi) exp((z - 1/2) log w - w), one exponential.
  const ComplexDisc k0 = disc_mul(disc_from_real(sqrt(Bounds(2.0) * consts::pi())),
                                  elem_exp(disc_sub(disc_mul(expo, elem_log(w)), w)));
  std::vector<ComplexDisc> out(l + 1);
  out[0] = k0;
  for (int k = 0; k < l; ++k) {
    ComplexDisc s;
    for (int j = 0; j <= k; ++j) s = disc_add(s, disc_mul(out[j], p_jet[k - j]));
    out[k + 1] = disc_div(s, ComplexDisc(static_cast<double>(k + 1)));
  }
  return out;
}

GammaJet gamma_jet(const ComplexDisc& z, int l, const SpougeContext& ctx) {
  if (!z.valid()) throw std::domain_error("gamma_jet: invalid argument disc");
  const std::vector<ComplexDisc> h = h_derivatives(z, ctx, l);
  const std::vector<ComplexDisc> p = p_derivatives(z, ctx.a, l);
  const std::vector<ComplexDisc> kd = k_derivatives(z, ctx.a, l, p);
  std::vector<double> xi(l + 1);
  for (int j = 0; j <= l; ++j) xi[j] = rnd::div_up(xi_bound(j, z, ctx.a), factorial_bounds(j).lo);
  GammaJet jet;
  jet.order = l;
  jet.coeffs.resize(l + 1);
  for (int m = 0; m <= l; ++m) {
    ComplexDisc s;
    for (int k = 0; k <= m; ++k) {
      const ComplexDisc widened{h[m - k].mid, rnd::add_up(h[m - k].rad, xi[m - k])};
      s = disc_add(s, disc_mul(kd[k], widened));
    }
    jet.coeffs[m] = s;
    if (!s.valid()) throw EnclosureError("gamma_jet: non-finite enclosure");
  }
  return jet;
}

SpougeContext choose_a(const ComplexDisc& z) {
  if (!(rnd::sub_down(z.mid.real(), z.rad) > -2.5))
    throw std::domain_error("choose_a: requires Re(z) - rad > -5/2");
  SpougeContext best;
  double best_score = std::numeric_limits<double>::infinity();
  for (int b = 3; b <= 30; ++b) {
    const double a = static_cast<double>(b) + 0.5;
    SpougeContext ctx = make_spouge_context(a);
    const double hrad = h_derivatives(z, ctx, 0)[0].rad;
    const double xi0 = xi_bound(0, z, a);
    if (hrad > xi0) return ctx;
    const double score = rnd::add_up(hrad, xi0);
    if (score < best_score) {
      best_score = score;
      best = std::move(ctx);
    }
  }
  return best;
}

std::vector<ComplexDisc> jet_mul(const std::vector<ComplexDisc>& a,
                                 const std::vector<ComplexDisc>& b, int order) {
  std::vector<ComplexDisc> out(order + 1);
  for (int t = 0; t <= order; ++t) {
    ComplexDisc s;
    for (int u = 0; u <= t; ++u) {
      if (u >= static_cast<int>(a.size()) || t - u >= static_cast<int>(b.size())) continue;
      s = disc_add(s, disc_mul(a[u], b[t - u]));
    }
    out[t] = s;
  }
  return out;
}

std::vector<ComplexDisc> jet_reciprocal(const std::vector<ComplexDisc>& a, int order) {
  std::vector<ComplexDisc> out(order + 1);
  const ComplexDisc inv0 = disc_inv(a[0]);
  out[0] = inv0;
  for (int t = 1; t <= order; ++t) {
    ComplexDisc s;
    for (int u = 1; u <= t; ++u) {
      if (u >= static_cast<int>(a.size())) break;
      s = disc_add(s, disc_mul(a[u], out[t - u]));
    }
    out[t] = -disc_mul(inv0, s);
  }
  return out;
}

GammaJet gamma_jet_reduced(const ComplexDisc& z, int l) {
  const double lo = rnd::sub_down(z.mid.real(), z.rad);
  int m = static_cast<int>(-2.0 - std::floor(lo));
  if (m < 1) m = 1;
  for (int i = 0; i < m; ++i) {
    const ComplexDisc zi = shift(z, static_cast<double>(i));
    if (!(zi.abs_down() > 0.0))
      throw EnclosureError("gamma_jet_reduced: shifted disc contains zero");
  }
  const ComplexDisc zs = shift(z, static_cast<double>(m));
  const SpougeContext ctx = choose_a(zs);
  const GammaJet base = gamma_jet(zs, l, ctx);

  // Jet of prod_{i<m} (z+i), its reciprocal, then the product with the
  // shifted Gamma jet; every coefficient is valid pointwise over the disc.
  std::vector<ComplexDisc> prod(l + 1);
  prod[0] = ComplexDisc(1.0);
  for (int i = 0; i < m; ++i) {
    std::vector<ComplexDisc> next(l + 1);
    const ComplexDisc zi = shift(z, static_cast<double>(i));
    for (int t = 0; t <= l; ++t) {
      next[t] = disc_mul(prod[t], zi);
      if (t >= 1) next[t] = disc_add(next[t], prod[t - 1]);
    }
    prod = std::move(next);
  }
  std::vector<ComplexDisc> recip;
  try {
    recip = jet_reciprocal(prod, l);
  } catch (const std::domain_error&) {
    throw EnclosureError("gamma_jet_reduced: reduction product interval contains zero");
  }
  GammaJet jet;
  jet.order = l;
  jet.coeffs = jet_mul(recip, base.coeffs, l);
  for (const auto& cd : jet.coeffs)
    if (!cd.valid()) throw EnclosureError("gamma_jet_reduced: non-finite enclosure");
  return jet;
}

GammaJet gamma_jet_auto(const ComplexDisc& z, int l) {
  if (rnd::sub_down(z.mid.real(), z.rad) > -2.5) {
    const SpougeContext ctx = choose_a(z);
    return gamma_jet(z, l, ctx);
  }
  return gamma_jet_reduced(z, l);
}

}  // namespace vgamma
