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

#ifndef VGAMMA_SCALAR_GAMMA_HPP
#define VGAMMA_SCALAR_GAMMA_HPP

#include <vector>

#include "vgamma/errors.hpp"
#include "vgamma/interval.hpp"

// Rigorous enclosures of Gamma^(0)(z)/0!, ..., Gamma^(l)(z)/l! for complex
// point and disc arguments, via the Spouge approximation
//   Gamma(z) = K(z) (H(z) + eps(z)),   |eps^(m)(z)| < xi_m(z),
// with H rational, K in closed form, and derivative jets obtained from the
// K' = K P recurrence. Arguments left of Re(z) - rad <= -5/2 go through the
// functional-equation reduction Gamma(z) = Gamma(z+m) / prod_i (z+i).

namespace vgamma {

// Spouge parameter a = b + 1/2 together with enclosures of the coefficients
// c_0..c_{ceil(a)-1}; independent of the evaluation point.
struct SpougeContext {
  double a = 0.0;
  std::vector<ComplexDisc> c;

  int term_count() const { return static_cast<int>(c.size()); }  // = ceil(a)
};

// Scaled-derivative enclosures: coeffs[j] contains Gamma^(j)(z')/j! for every
// z' in the argument disc, j = 0..order.
struct GammaJet {
  int order = 0;
  std::vector<ComplexDisc> coeffs;

  const ComplexDisc& value() const { return coeffs.front(); }
};

// Builds the coefficient context for a = b + 1/2 (b integer, 3 <= b <= 60).
SpougeContext make_spouge_context(double a);

// Upper bound of xi_m over the disc; denominator uses Re(mid) - rad - 1 + a.
// Requires a >= 3 and that quantity positive.
double xi_bound(int m, const ComplexDisc& z, double a);

// Enclosures of H^(j)(z)/j!, j = 0..l. Throws EnclosureError when some
// z - 1 + k disc contains a pole.
std::vector<ComplexDisc> h_derivatives(const ComplexDisc& z, const SpougeContext& ctx, int l);

// Enclosures of P^(j)(z)/j!, j = 0..l, with P(z) = log(z-1+a) - (a-1/2)/(z-1+a).
std::vector<ComplexDisc> p_derivatives(const ComplexDisc& z, double a, int l);

// Enclosures of K^(k)(z)/k!, k = 0..l, from the K' = K P recurrence;
// p_jet must hold at least l entries of p_derivatives output.
std::vector<ComplexDisc> k_derivatives(const ComplexDisc& z, double a, int l,
                                       const std::vector<ComplexDisc>& p_jet);

// Full jet at a disc argument with Re(mid) - rad - 1 + a > 0.
GammaJet gamma_jet(const ComplexDisc& z, int l, const SpougeContext& ctx);

// Parameter selection: increment a from 7/2 until the radius of the H(z)
// enclosure exceeds xi_0(z); capped at b = 30, returning the best a seen.
// Requires Re(mid) - rad > -5/2.
SpougeContext choose_a(const ComplexDisc& z);

// Jet at arguments with Re(mid) - rad <= -5/2 (also valid nearer the axis),
// via Gamma(z) = Gamma(z+m) / prod_{i<m}(z+i) differentiated in truncated
// Taylor arithmetic. Throws EnclosureError if a shifted disc contains 0.
GammaJet gamma_jet_reduced(const ComplexDisc& z, int l);

// Dispatch: direct jet when choose_a's precondition verifies, else reduced.
GammaJet gamma_jet_auto(const ComplexDisc& z, int l);

// Truncated Taylor (jet) helpers shared with the block code.
std::vector<ComplexDisc> jet_mul(const std::vector<ComplexDisc>& a,
                                 const std::vector<ComplexDisc>& b, int order);
std::vector<ComplexDisc> jet_reciprocal(const std::vector<ComplexDisc>& a, int order);

}  // namespace vgamma

#endif  // VGAMMA_SCALAR_GAMMA_HPP
