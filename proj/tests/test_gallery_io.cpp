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

#include <sstream>

#include "support.hpp"
#include "vgamma/driver.hpp"
#include "vgamma/gallery.hpp"
#include "vgamma/matrix_io.hpp"

using namespace vgamma;

TEST_CASE("gallery definitions") {
  // printed ex3 matrix
  const Eigen::MatrixXcd a0 = generate_gallery("ex3", 4, 1.0);
  Eigen::MatrixXcd expect(4, 4);
  expect << 2, 2, 1, 0, 0, 1, 1, 1, -1, -1, 0, 0, 1, 1, 1, 1;
  CHECK((a0 - expect).cwiseAbs().maxCoeff() == 0.0);

  // minij n = 3 is (1/3) [[1,1,1],[1,2,2],[1,2,3]]
  const Eigen::MatrixXcd mj = generate_gallery("minij", 3, 0.0);
  CHECK(mj(0, 0).real() == 1.0 / 3.0);
  CHECK(mj(1, 2).real() == 2.0 / 3.0);
  CHECK(mj(2, 2).real() == 1.0);

  // ex4 permutation is orthogonal and ex4 is a symmetric permutation of
  // diag(A0, A0)
  const Eigen::MatrixXcd e4 = generate_gallery("ex4", 8, 1.0);
  CHECK(e4.cwiseAbs().sum() == doctest::Approx(2 * a0.cwiseAbs().sum()));

  // frank(3) classical values
  const Eigen::MatrixXcd f3 = generate_gallery("frank", 3, 0.0);
  Eigen::MatrixXcd f3e(3, 3);
  f3e << 3, 2, 1, 2, 2, 1, 0, 1, 1;
  CHECK((f3 - f3e).cwiseAbs().maxCoeff() == 0.0);

  // poisson takes the grid side; order is g^2 with 4 on the diagonal
  const Eigen::MatrixXcd p3 = generate_gallery("poisson", 3, 0.0);
  CHECK(p3.rows() == 9);
  CHECK(p3(0, 0).real() == 4.0);
  CHECK(p3(0, 1).real() == -1.0);
  CHECK(p3(0, 3).real() == -1.0);

  CHECK_THROWS_AS(generate_gallery("nope", 3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(generate_gallery("frank", 0, 0.0), std::invalid_argument);

  // determinism: bit-identical across calls
  const Eigen::MatrixXcd g1 = generate_gallery("gcdmat", 40, 0.0);
  const Eigen::MatrixXcd g2b = generate_gallery("gcdmat", 40, 0.0);
  CHECK((g1 - g2b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix market round trip, symmetry expansion, errors") {
  testsup::Lcg rng(71);
  Eigen::MatrixXcd m(3, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Complex{rng.uniform(-2, 2), rng.uniform(-1, 1)};
  std::stringstream ss;
  write_matrix_market(ss, m);
  const Eigen::MatrixXcd back = read_matrix_market(ss);
  CHECK((m - back).cwiseAbs().maxCoeff() == 0.0);  // %.17g round trips exactly

  std::stringstream coo;
  coo << "%%MatrixMarket matrix coordinate real symmetric\n"
      << "% comment line\n"
      << "2 2 2\n"
      << "1 1 3.5\n"
      << "2 1 -1.25\n";
  const Eigen::MatrixXcd sym = read_matrix_market(coo);
  CHECK(sym(0, 1) == Complex{-1.25, 0.0});
  CHECK(sym(1, 0) == Complex{-1.25, 0.0});

  std::stringstream herm;
  herm << "%%MatrixMarket matrix coordinate complex hermitian\n"
       << "2 2 2\n"
       << "1 1 1.0 0\n"
       << "2 1 0.5 0.25\n";
  const Eigen::MatrixXcd h = read_matrix_market(herm);
  CHECK(h(0, 1) == Complex{0.5, -0.25});

  std::stringstream bad;
  bad << "%%MatrixMarket matrix coordinate real general\n2 2 1\n5 1 1.0\n";
  CHECK_THROWS_WITH_AS(static_cast<void>(read_matrix_market(bad)),
                       doctest::Contains("entry 1"), std::runtime_error);

  std::stringstream pattern;
  pattern << "%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 1\n";
  CHECK_THROWS_AS(static_cast<void>(read_matrix_market(pattern)), std::runtime_error);
}

TEST_CASE("json matrix input forms") {
  std::stringstream plain("[[1, 2], [3, 4]]");
  const Eigen::MatrixXcd p = read_matrix_json(plain);
  CHECK(p(1, 0) == Complex{3.0, 0.0});

  std::stringstream cplx(R"({"matrix": [[[1, -1], 2], [0, [0, 3]]]})");
  const Eigen::MatrixXcd c = read_matrix_json(cplx);
  CHECK(c(0, 0) == Complex{1.0, -1.0});
  CHECK(c(1, 1) == Complex{0.0, 3.0});

  std::stringstream bad(R"({"rows": 2})");
  CHECK_THROWS_AS(static_cast<void>(read_matrix_json(bad)), std::runtime_error);
}

TEST_CASE("report JSON round trip is bit exact") {
  const Eigen::MatrixXcd a = generate_gallery("frank", 5, 0.0);
  const GammaResult r = gamma_spectral(a);
  REQUIRE(r.status == RunStatus::Ok);
  const std::string json = report_to_json(r, a.rows());
  std::stringstream ss(json);
  const IntervalMatrix back = read_report_enclosure(ss);
  CHECK((back.mid - r.enclosure.mid).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.rad - r.enclosure.rad).cwiseAbs().maxCoeff() == 0.0);

  // failure reports carry status and no enclosure
  const GammaResult rf = gamma_spectral(generate_gallery("ex3", 4, 1.0));
  const std::string jf = report_to_json(rf, 4);
  CHECK(jf.find("vbd-failure") != std::string::npos);
  std::stringstream sf(jf);
  CHECK_THROWS_AS(static_cast<void>(read_report_enclosure(sf)), std::runtime_error);
}
