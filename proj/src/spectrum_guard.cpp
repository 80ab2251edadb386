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

#include "vgamma/spectrum_guard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vgamma/rounding.hpp"

namespace vgamma {

std::complex<double> guard_witness(std::complex<double> lambda) {
  const double re = lambda.real();
  // floor/ceil are exact; at exact negative integers both gaps are 0 and the
  // imaginary part alone carries the clearance.
  const double f = std::max({re, std::floor(re) - re, re - std::ceil(re)});
  return {f, lambda.imag()};
}

bool verify_no_nonpositive_integers(const GuardInput& g) {
  if (g.lambda.size() != g.r.size())
    throw std::invalid_argument("spectrum guard: center/radius length mismatch");
  for (std::size_t i = 0; i < g.lambda.size(); ++i) {
    if (!(g.r[i] >= 0.0) || !std::isfinite(g.r[i])) return false;
    const std::complex<double> f = guard_witness(g.lambda[i]);
    // |f| from below, radius as given; the gap must be strictly positive.
    const double fabs_lo = rnd::cabs_down(f.real(), f.imag());
    if (!(rnd::sub_down(fabs_lo, g.r[i]) > 0.0)) return false;
  }
  return true;
}

}  // namespace vgamma
