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

// Benchmarks the OpenMP interval matrix kernel against the serial reference
// and the structured argument-reduction recurrence against naive interval
// matrix-product chaining.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include "vgamma/block_gamma.hpp"
#include "vgamma/interval.hpp"
#include "vgamma/parallel.hpp"

using namespace vgamma;

namespace {

struct Lcg {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  double next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) * 0x1p-53;
  }
};

IntervalMatrix random_matrix(Lcg& rng, int nsize) {
  IntervalMatrix m(nsize, nsize);
  for (int j = 0; j < nsize; ++j)
    for (int i = 0; i < nsize; ++i) {
      m.mid(i, j) = Complex{2.0 * rng.next() - 1.0, 2.0 * rng.next() - 1.0};
      m.rad(i, j) = 1e-6 * rng.next();
    }
  return m;
}

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (t < best) best = t;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) par::set_max_threads(std::stoi(argv[1]));
  std::printf("threads: %d\n\n", par::max_threads());

  std::printf("interval matrix product, serial vs OpenMP\n");
  std::printf("%6s %12s %12s %9s\n", "n", "serial [s]", "parallel [s]", "speedup");
  Lcg rng;
  for (int nsize : {64, 128, 256}) {
    const IntervalMatrix a = random_matrix(rng, nsize);
    const IntervalMatrix b = random_matrix(rng, nsize);
    volatile double sink = 0.0;
    const double ts = best_of(3, [&] { sink = mat_mul_serial(a, b).rad.sum(); });
    const double tp = best_of(3, [&] { sink = mat_mul(a, b).rad.sum(); });
    (void)sink;
    std::printf("%6d %12.4f %12.4f %8.2fx\n", nsize, ts, tp, ts / tp);
  }

  std::printf("\nargument-reduction product, recurrence vs naive chaining (p=200, m=50)\n");
  const int p = 200, m = 50;
  Eigen::MatrixXd r(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) r(i, j) = 1e-8 * rng.next();
  const Complex lam{-3.3, 0.7};

  const double t_rec =
      best_of(3, [&] { ar_product_spectral(lam, r, m, ShiftDirection::Up); });

  double t_naive;
  {
    const auto factor = [&](int i) {
      IntervalMatrix f(Eigen::MatrixXcd::Identity(p, p) * (lam + Complex{double(i), 0.0}), r);
      return f;
    };
    t_naive = best_of(1, [&] {
      IntervalMatrix acc = factor(0);
      for (int i = 1; i < m; ++i) acc = mat_mul(factor(i), acc);
    });
  }
  std::printf("recurrence: %.4f s   naive chain: %.4f s   ratio: %.1fx\n", t_rec, t_naive,
              t_naive / t_rec);
  return 0;
}
