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

#ifndef VGAMMA_DRIVER_HPP
#define VGAMMA_DRIVER_HPP

#include <string>
#include <vector>

#include "vgamma/block_gamma.hpp"
#include "vgamma/spectrum_guard.hpp"
#include "vgamma/verified_linalg.hpp"

// End-to-end enclosure of the matrix gamma function: verified block
// diagonalization, the nonpositive-integer spectrum guard, per-block
// enclosures, and reassembly W diag(G_1..G_q) W^{-1} through one verified
// solve. Success proves mu(A) has no nonpositive integers.

namespace vgamma {

enum class Method { Spectral, Jordan, Auto };

enum class RunStatus { Ok, VbdFailure, GuardFailure, BlockFailure };

struct PhaseTimings {
  double vbd = 0.0;
  double guard = 0.0;
  double blocks = 0.0;
  double reassembly = 0.0;
  double total = 0.0;
};

struct GammaResult {
  IntervalMatrix enclosure;  // populated only when status == Ok
  bool spectrum_verified = false;
  Method method = Method::Spectral;
  double rr = std::numeric_limits<double>::quiet_NaN();
  PhaseTimings timings;
  RunStatus status = RunStatus::VbdFailure;
  std::string message;  // failure detail, empty on success
};

GammaResult gamma_spectral(const Eigen::MatrixXcd& a);
GammaResult gamma_jordan(const Eigen::MatrixXcd& a, const std::vector<int>& hint = {});
// Runs the spectral method and falls back to the Jordan method on failure.
GammaResult gamma_auto(const Eigen::MatrixXcd& a, const std::vector<int>& hint = {});

// ||rad||_inf (upward) over ||mid||_inf (downward).
double relative_radius(const IntervalMatrix& enclosure);

const char* to_string(RunStatus s);
const char* to_string(Method m);

}  // namespace vgamma

#endif  // VGAMMA_DRIVER_HPP
