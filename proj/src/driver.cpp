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

#include "vgamma/driver.hpp"

#include <chrono>

#include "vgamma/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vgamma {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

GammaResult run_method(const Eigen::MatrixXcd& a, Method method,
                       const std::vector<int>& hint) {
  GammaResult res;
  res.method = method;
  const auto t_start = Clock::now();

  // Phase 1: verified block diagonalization.
  VbdResult vbd;
  auto t0 = Clock::now();
  try {
    vbd = method == Method::Jordan ? vbd_jordan(a, hint) : vbd_spectral(a);
  } catch (const std::exception& e) {
    res.status = RunStatus::VbdFailure;
    res.message = e.what();
    res.timings.vbd = seconds_since(t0);
    res.timings.total = seconds_since(t_start);
    return res;
  }
  res.timings.vbd = seconds_since(t0);

  // Phase 2: no eigenvalue may be a nonpositive integer.
  t0 = Clock::now();
  GuardInput guard;
  for (const auto& [c, r] : vbd.spectrum_discs) {
    guard.lambda.push_back(c);
    guard.r.push_back(r);
  }
  const bool guard_ok = verify_no_nonpositive_integers(guard);
  res.timings.guard = seconds_since(t0);
  if (!guard_ok) {
    res.status = RunStatus::GuardFailure;
    res.message = "spectrum guard: min(|f_i| - r_i) > 0 could not be verified";
    res.timings.total = seconds_since(t_start);
    return res;
  }
  res.spectrum_verified = true;

  // Phase 3: per-block enclosures (independent, may run in parallel).
  t0 = Clock::now();
  const Eigen::Index n = a.rows();
  const int q = static_cast<int>(vbd.blocks.size());
  std::vector<IntervalMatrix> gammas(q);
  std::vector<std::string> block_errors(q);
  const int nthreads = par::max_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (nthreads > 1 && q > 1)
#endif
  for (int j = 0; j < q; ++j) {
    try {
      gammas[j] = enclose_block_gamma(vbd.blocks[j]);
    } catch (const std::exception& e) {
      block_errors[j] = e.what();
    }
  }
  res.timings.blocks = seconds_since(t0);
  for (int j = 0; j < q; ++j)
    if (!block_errors[j].empty()) {
      res.status = RunStatus::BlockFailure;
      res.message = "block " + std::to_string(j) + ": " + block_errors[j];
      res.timings.total = seconds_since(t_start);
      return res;
    }

  // Phase 4: reassembly W diag(G_j) W^{-1}; the transposed solve computes
  // diag(G_j) W^{-1} with one verified solve, then one interval product.
  t0 = Clock::now();
  IntervalMatrix diag(n, n);
  for (int j = 0; j < q; ++j)
    diag.set_block(vbd.blocks[j].indices.front(), vbd.blocks[j].indices.front(), gammas[j]);
  try {
    const IntervalMatrix nt = verified_solve(vbd.w.transpose(), diag.transpose());
    res.enclosure = mat_mul(vbd.w, nt.transpose());
  } catch (const std::exception& e) {
    res.status = RunStatus::VbdFailure;
    res.message = std::string("reassembly: ") + e.what();
    res.timings.reassembly = seconds_since(t0);
    res.timings.total = seconds_since(t_start);
    return res;
  }
  res.timings.reassembly = seconds_since(t0);
  if (!res.enclosure.valid()) {
    res.status = RunStatus::BlockFailure;
    res.message = "reassembly produced a non-finite enclosure";
    res.timings.total = seconds_since(t_start);
    return res;
  }
  res.rr = relative_radius(res.enclosure);
  res.status = RunStatus::Ok;
  res.timings.total = seconds_since(t_start);
  return res;
}

}  // namespace

GammaResult gamma_spectral(const Eigen::MatrixXcd& a) { return run_method(a, Method::Spectral, {}); }

GammaResult gamma_jordan(const Eigen::MatrixXcd& a, const std::vector<int>& hint) {
  return run_method(a, Method::Jordan, hint);
}

GammaResult gamma_auto(const Eigen::MatrixXcd& a, const std::vector<int>& hint) {
  GammaResult res = run_method(a, Method::Spectral, {});
  if (res.status == RunStatus::Ok) {
    res.method = Method::Auto;
    return res;
  }
  GammaResult jres = run_method(a, Method::Jordan, hint);
  jres.method = Method::Auto;
  jres.timings.total += res.timings.total;
  return jres;
}

double relative_radius(const IntervalMatrix& enclosure) {
  const IntervalMatrix radonly(Eigen::MatrixXcd::Zero(enclosure.rows(), enclosure.cols()),
                               enclosure.rad);
  const double num = norm_bound(radonly, NormKind::Inf);
  const double den = norm_lower(enclosure.mid, NormKind::Inf);
  if (!(den > 0.0)) throw std::invalid_argument("relative_radius: zero midpoint norm");
  return rnd::div_up(num, den);
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::VbdFailure: return "vbd-failure";
    case RunStatus::GuardFailure: return "guard-failure";
    default: return "block-failure";
  }
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Spectral: return "spectral";
    case Method::Jordan: return "jordan";
    default: return "auto";
  }
}

}  // namespace vgamma
