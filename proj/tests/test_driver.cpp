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

#include <doctest.h>

#include "oracle_data/oracle_matrix.hpp"
#include "oracle_data/oracle_scalar.hpp"
#include "support.hpp"
#include "vgamma/driver.hpp"
#include "vgamma/gallery.hpp"

using namespace vgamma;

namespace {

Eigen::MatrixXcd oracle_matrix(const double* flat, int n) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = Complex{flat[2 * (i * n + j)], flat[2 * (i * n + j) + 1]};
  return m;
}

}  // namespace

TEST_CASE("driver: identity and factorial diagonal") {
  const GammaResult r1 = gamma_spectral(Eigen::MatrixXcd::Identity(2, 2));
  REQUIRE(r1.status == RunStatus::Ok);
  CHECK(r1.spectrum_verified);
  CHECK(r1.enclosure.contains(Eigen::MatrixXcd::Identity(2, 2)));

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  const GammaResult r2 = gamma_spectral(d);
  REQUIRE(r2.status == RunStatus::Ok);
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(3, 3);
  expect(0, 0) = 1.0;
  expect(1, 1) = 1.0;
  expect(2, 2) = 2.0;
  CHECK(testsup::contains_oracle(r2.enclosure, expect));
}

TEST_CASE("driver: triangular divided-difference case contains the identity") {
  Eigen::MatrixXcd a(2, 2);
  a << 1.0, 1.0, 0.0, 2.0;
  const GammaResult r = gamma_spectral(a);
  REQUIRE(r.status == RunStatus::Ok);
  // Gamma(A) = [[Gamma(1), (Gamma(2)-Gamma(1))/1], [0, Gamma(2)]] = I
  CHECK(testsup::contains_oracle(r.enclosure, Eigen::MatrixXcd::Identity(2, 2)));
}

TEST_CASE("driver: frank(5) matches the frozen oracle with small RR") {
  const GammaResult r = gamma_spectral(generate_gallery("frank", 5, 0.0));
  REQUIRE(r.status == RunStatus::Ok);
  CHECK(r.rr <= 1e-8);
  CHECK(testsup::contains_oracle(r.enclosure, oracle_matrix(oracle::kGammaFrank5, 5)));
}

TEST_CASE("driver: guard rejections and acceptance") {
  Eigen::MatrixXcd bad1 = Eigen::MatrixXcd::Zero(2, 2);
  bad1(0, 0) = -1.0;
  bad1(1, 1) = 2.0;
  CHECK(gamma_spectral(bad1).status == RunStatus::GuardFailure);

  Eigen::MatrixXcd bad2 = Eigen::MatrixXcd::Zero(2, 2);
  bad2(1, 1) = 3.0;
  CHECK(gamma_spectral(bad2).status == RunStatus::GuardFailure);

  Eigen::MatrixXcd ok = Eigen::MatrixXcd::Zero(2, 2);
  ok(0, 0) = -2.5;
  ok(1, 1) = 3.0;
  const GammaResult r = gamma_spectral(ok);
  REQUIRE(r.status == RunStatus::Ok);
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(2, 2);
  expect(0, 0) = oracle::kGammaNeg5Half;
  expect(1, 1) = 2.0;
  CHECK(testsup::contains_oracle(r.enclosure, expect));
}

TEST_CASE("driver: defective input fails spectrally, succeeds via Jordan") {
  const Eigen::MatrixXcd a = generate_gallery("ex3", 4, 1.0);
  const GammaResult rs = gamma_spectral(a);
  CHECK(rs.status == RunStatus::VbdFailure);
  CHECK_FALSE(rs.message.empty());

  const GammaResult rj = gamma_jordan(a);
  REQUIRE(rj.status == RunStatus::Ok);
  CHECK(rj.rr <= 1e-8);
  CHECK(testsup::contains_oracle(rj.enclosure, oracle_matrix(oracle::kGammaEx3Sigma1, 4)));

  const GammaResult ra = gamma_auto(a);
  REQUIRE(ra.status == RunStatus::Ok);
  CHECK(ra.method == Method::Auto);
}

TEST_CASE("driver: similarity invariance on the permuted derogatory matrix") {
  const Eigen::MatrixXcd a = generate_gallery("ex4", 8, 1.0);
  const GammaResult r = gamma_jordan(a);
  REQUIRE(r.status == RunStatus::Ok);
  // U diag(G, G) U^T with the exact permutation applied to the ex3 oracle
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(8, 8);
  const int cols[8] = {6, 4, 2, 0, 7, 5, 3, 1};
  for (int j = 0; j < 8; ++j) u(cols[j], j) = 1.0;
  Eigen::MatrixXcd g2 = Eigen::MatrixXcd::Zero(8, 8);
  g2.topLeftCorner(4, 4) = oracle_matrix(oracle::kGammaEx3Sigma1, 4);
  g2.bottomRightCorner(4, 4) = oracle_matrix(oracle::kGammaEx3Sigma1, 4);
  CHECK(testsup::contains_oracle(r.enclosure, u * g2 * u.transpose()));
}

TEST_CASE("driver: jordan hint on the identity") {
  const GammaResult r = gamma_jordan(Eigen::MatrixXcd::Identity(2, 2), {1, 1});
  REQUIRE(r.status == RunStatus::Ok);
  CHECK(r.enclosure.contains(Eigen::MatrixXcd::Identity(2, 2)));
}

TEST_CASE("relative radius examples") {
  CHECK(relative_radius(IntervalMatrix::identity(3)) == 0.0);
  IntervalMatrix m = IntervalMatrix::identity(2);
  m.rad.setConstant(0.01);
  const double rr = relative_radius(m);
  CHECK(rr >= 0.02);
  CHECK(rr <= 0.02 * (1 + 1e-12));
  CHECK_THROWS_AS(relative_radius(IntervalMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("driver functional equation on small galleries") {
  for (const auto& [name, n] : std::initializer_list<std::pair<const char*, int>>{
           {"frank", 5}, {"poisson", 3}, {"gcdmat", 8}, {"minij", 8}}) {
    const Eigen::MatrixXcd a = generate_gallery(name, n, 0.0);
    const GammaResult g = gamma_auto(a);
    REQUIRE(g.status == RunStatus::Ok);
    const Eigen::MatrixXcd ashift = a + Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    const GammaResult gs = gamma_auto(ashift);
    REQUIRE(gs.status == RunStatus::Ok);
    CHECK(intersects(gs.enclosure, mat_mul(IntervalMatrix(a), g.enclosure)));
  }
}
