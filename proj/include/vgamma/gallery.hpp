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

#ifndef VGAMMA_GALLERY_HPP
#define VGAMMA_GALLERY_HPP

#include <Eigen/Dense>
#include <string>

// Deterministic test-matrix generators. Sizes and parameters:
//   frank n        classical unreflected Frank matrix
//   gcdmat n       gcd(i, j) / n
//   minij n        min(i, j) / n
//   poisson g      2-D Laplacian on a g x g grid (matrix order g^2)
//   ex2 [eps]      [[1, 1], [0, 1 + eps]], default eps = 2^-48
//   ex3 [sigma]    sigma * A0 with the fixed defective 4x4 A0, default 1
//   ex4 [sigma]    sigma * P diag(A0, A0) P^T (derogatory 8x8), default 1

namespace vgamma {

Eigen::MatrixXcd generate_gallery(const std::string& name, int n, double param);

// The fixed defective 4x4 block used by ex3/ex4.
Eigen::MatrixXcd gallery_a0();

}  // namespace vgamma

#endif  // VGAMMA_GALLERY_HPP
