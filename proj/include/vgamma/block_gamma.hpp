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

#ifndef VGAMMA_BLOCK_GAMMA_HPP
#define VGAMMA_BLOCK_GAMMA_HPP

#include <optional>
#include <vector>

#include "vgamma/interval.hpp"
#include "vgamma/scalar_gamma.hpp"
#include "vgamma/verified_linalg.hpp"

// Gamma of one VBD block P = lambda_hat I + M + Q, |Q| <= R: computable
// perturbation bounds around the block center, the block-Toeplitz center
// evaluation from scalar jets, and argument reductions whose structured
// interval products cost O(m p^2) instead of O(m p^3).

namespace vgamma {

// Upward-rounded omega(alpha) = (2a+1)/(a^2(a+1)^2) + (cosh 1 - 1)/(a+2)^2,
// an upper bound for the negated derivative of the lower incomplete gamma.
double omega_bound(double alpha);
Bounds omega_range(const Bounds& alpha);

struct PerturbationDelta {
  std::optional<double> delta_1;    // set when the 1-norm precondition holds
  std::optional<double> delta_inf;  // set when the inf-norm precondition holds
  // min over the verified norms; empty when neither precondition verifies.
  std::optional<double> delta() const {
    if (delta_1 && delta_inf) return std::min(*delta_1, *delta_inf);
    return delta_1 ? delta_1 : delta_inf;
  }
};

// ||Gamma(l I + Q) - Gamma(l I)||_p < delta_p for all |Q| <= R, valid when
// Re(l) - ||R||_p > 0; nullopt when the precondition cannot be verified.
std::optional<double> delta_spectral(Complex lambda_hat, const Eigen::MatrixXd& r, NormKind p);

// Jordan analog with ||M + R||_p in the argument shifts.
std::optional<double> delta_jordan(Complex lambda_hat, const std::vector<int>& sizes,
                                   const Eigen::MatrixXd& r, NormKind p);

// Gamma(lambda_hat I + M) as block-diagonal upper-triangular Toeplitz from
// the scalar jet; entries are replicated without re-rounding.
IntervalMatrix gamma_block_center(Complex lambda_hat, const std::vector<int>& sizes);

enum class ShiftDirection { Up, Down, ScalarUp };

// Shift counts landing the reduced argument in the target window:
// Up: 1 - floor(Re - norm) (window [1,2)); Down: floor(Re - norm) - 1
// (window [1,2)); ScalarUp: -2 - floor(Re - norm) (window [-2,-1)).
int select_m(Complex lambda_hat, double norm, ShiftDirection dir);

// Structured enclosure of prod <(lambda +- i) I (+ M), R>.
struct ArProduct {
  Eigen::MatrixXcd c;  // midpoint: scalar multiple of I, or block Toeplitz
  Eigen::MatrixXd r;

  IntervalMatrix as_interval() const { return {c, r}; }
};

ArProduct ar_product_spectral(Complex lambda_hat, const Eigen::MatrixXd& r, int m,
                              ShiftDirection dir);
ArProduct ar_product_jordan(Complex lambda_hat, const std::vector<int>& sizes,
                            const Eigen::MatrixXd& r, int m, ShiftDirection dir);

// Full per-block dispatch: scalar jet for 1x1 blocks, otherwise the
// center-plus-delta bound with argument reduction up/down as required.
IntervalMatrix enclose_block_gamma(const Block& blk);

// Center-plus-delta at the given center (shared by the dispatch and tests).
IntervalMatrix gamma_center_plus_delta(Complex lambda_hat, const std::vector<int>& sizes,
                                       const Eigen::MatrixXd& r);

}  // namespace vgamma

#endif  // VGAMMA_BLOCK_GAMMA_HPP
