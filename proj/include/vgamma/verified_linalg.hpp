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

#ifndef VGAMMA_VERIFIED_LINALG_HPP
#define VGAMMA_VERIFIED_LINALG_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "vgamma/errors.hpp"
#include "vgamma/interval.hpp"

// Verified dense linear algebra: enclosures for solutions of (interval)
// linear systems, nonsingularity certificates, and verified block
// diagonalization. A VBD certifies existence of exact W_j, P_j with
// A W_j = W_j P_j, W = [W_1..W_q] nonsingular, W_j inside the returned basis
// enclosure and P_j inside <lambda_hat I + M, R>. Verification runs a
// Krawczyk fixed point in the transformed space B = X^{-1} A X, where X is
// the numerical eigenvector (or Jordan chain) basis: the candidate invariant
// subspaces become coordinate subspaces, so a cheap structured
// preconditioner suffices and total cost stays at O(n^3).

namespace vgamma {

// One diagonal block of a VBD.
struct Block {
  std::vector<int> indices;       // column range in the reordered basis
  Complex lambda_hat{0.0, 0.0};
  double r_spec = 0.0;            // radius of the spectrum disc around lambda_hat
  Eigen::MatrixXd R;              // p x p: |P - (lambda_hat I + M)| <= R
  std::vector<int> jordan_sizes;  // empty => spectral variant (M = 0)
  IntervalMatrix basis;           // n x p enclosure of W_j

  int size() const { return static_cast<int>(indices.size()); }
  // Dense 0/1 image of M (upper shift per Jordan sub-block).
  Eigen::MatrixXd nilpotent() const;
};

struct VbdResult {
  std::vector<Block> blocks;
  IntervalMatrix w;  // n x n basis enclosure, every member verified nonsingular
  std::vector<std::pair<Complex, double>> spectrum_discs;  // covers mu(A)
};

// Enclosure of {X : M X = N, M in A, N in B}; certifies every M in A
// nonsingular. Throws VerificationError when no certificate is obtained.
IntervalMatrix verified_solve(const IntervalMatrix& a, const IntervalMatrix& b);

// true => every member matrix is nonsingular; false => unknown.
bool verify_nonsingular(const IntervalMatrix& a);

// Transitive closure of overlap among discs <lambda_i, kappa r_i + tau>.
// Groups are ordered by smallest member, members ascending.
std::vector<std::vector<int>> cluster_eigenvalues(const std::vector<Complex>& lambda,
                                                  const std::vector<double>& radii,
                                                  double kappa, double tau);

// VBD from a numerical spectral decomposition; all blocks carry M = 0.
VbdResult vbd_spectral(const Eigen::MatrixXcd& a);

// VBD from a numerical Jordan decomposition (Schur + staircase); blocks carry
// the detected (or hinted) Jordan structure. The hint is a flat list of block
// sizes consumed cluster by cluster in order.
VbdResult vbd_jordan(const Eigen::MatrixXcd& a, const std::vector<int>& hint = {});

}  // namespace vgamma

#endif  // VGAMMA_VERIFIED_LINALG_HPP
