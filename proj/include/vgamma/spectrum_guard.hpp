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

#ifndef VGAMMA_SPECTRUM_GUARD_HPP
#define VGAMMA_SPECTRUM_GUARD_HPP

#include <complex>
#include <vector>

// Proof that no eigenvalue is a nonpositive integer, from a disc cover of the
// spectrum: with f = max(Re l, floor(Re l) - Re l, Re l - ceil(Re l)) + i Im l,
// |f| equals the distance from l to the nearest nonpositive integer when
// Re l < 0 and |l| otherwise, so min(|f_i| - r_i) > 0 settles it.

namespace vgamma {

struct GuardInput {
  std::vector<std::complex<double>> lambda;  // disc centers
  std::vector<double> r;                     // disc radii, >= 0
};

// The witness point whose modulus measures the clearance from Z_-.
std::complex<double> guard_witness(std::complex<double> lambda);

// True only when min_i (|f_i| - r_i) > 0 holds with |f_i| lower-bounded and
// r_i taken as given (already an upper bound); false means unknown.
bool verify_no_nonpositive_integers(const GuardInput& g);

}  // namespace vgamma

#endif  // VGAMMA_SPECTRUM_GUARD_HPP
