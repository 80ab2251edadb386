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

#ifndef VGAMMA_TESTS_SUPPORT_HPP
#define VGAMMA_TESTS_SUPPORT_HPP

#include <complex>
#include <cstdint>

#include "vgamma/interval.hpp"

namespace testsup {

// Deterministic 64-bit LCG, mirrored bit-for-bit by tests/oracles/generate.py
// so randomized suites share instances with the oracle generator without
// storing them.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed = 0x123456789ABCDEFull) : state(seed) {}
  std::uint64_t next_u64() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  }
  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1p-53;
  }
  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
  std::complex<double> point_in_disc(const vgamma::ComplexDisc& d) {
    // Rejection-free: uniform angle idea is fine for membership tests; use
    // sqrt for radial spread plus occasional boundary-heavy samples.
    const double u = next_double();
    const double r = d.rad * (u < 0.2 ? 1.0 : std::sqrt(next_double()));
    const double c = 2.0 * next_double() - 1.0;  // cos theta proxy
    const double s = (next_double() < 0.5 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1.0 - c * c));
    return d.mid + std::complex<double>(r * c, r * s);
  }
};

// Containment check with slack for the oracle's own double rounding: the
// frozen reference is correct to 50 digits, so its double image is within
// half an ulp of the true value.
inline bool contains_oracle(const vgamma::ComplexDisc& d, std::complex<double> oracle) {
  const double scale = std::abs(oracle);
  const double slack = 4.0 * vgamma::rnd::kUnit * scale + 1e-307;
  return d.contains(oracle, slack);
}

inline bool contains_oracle(const vgamma::IntervalMatrix& m, const Eigen::MatrixXcd& oracle) {
  if (m.rows() != oracle.rows() || m.cols() != oracle.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!contains_oracle(m(i, j), oracle(i, j))) return false;
  return true;
}

}  // namespace testsup

#endif  // VGAMMA_TESTS_SUPPORT_HPP
