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

#include "vgamma/gallery.hpp"

#include <numeric>
#include <stdexcept>

namespace vgamma {

namespace {

Eigen::MatrixXcd frank(int n) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j >= i)
        a(i - 1, j - 1) = static_cast<double>(n - j + 1);
      else if (j == i - 1)
        a(i - 1, j - 1) = static_cast<double>(n - j);
    }
  return a;
}

Eigen::MatrixXcd gcdmat(int n) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a(i - 1, j - 1) = static_cast<double>(std::gcd(i, j)) / static_cast<double>(n);
  return a;
}

Eigen::MatrixXcd minij(int n) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a(i - 1, j - 1) = static_cast<double>(std::min(i, j)) / static_cast<double>(n);
  return a;
}

Eigen::MatrixXcd poisson(int g) {
  const int n = g * g;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 4.0;
    const int r = i / g, c = i % g;
    if (c > 0) a(i, i - 1) = -1.0;
    if (c < g - 1) a(i, i + 1) = -1.0;
    if (r > 0) a(i, i - g) = -1.0;
    if (r < g - 1) a(i, i + g) = -1.0;
  }
  return a;
}

}  // namespace

Eigen::MatrixXcd gallery_a0() {
  Eigen::MatrixXcd a0(4, 4);
  a0 << 2, 2, 1, 0, 0, 1, 1, 1, -1, -1, 0, 0, 1, 1, 1, 1;
  return a0;
}

Eigen::MatrixXcd generate_gallery(const std::string& name, int n, double param) {
  if (name == "frank" || name == "gcdmat" || name == "minij" || name == "poisson") {
    if (n < 1) throw std::invalid_argument("gallery: n must be >= 1");
    if (name == "frank") return frank(n);
    if (name == "gcdmat") return gcdmat(n);
    if (name == "minij") return minij(n);
    return poisson(n);
  }
  if (name == "ex2") {
    const double eps = param == 0.0 ? std::ldexp(1.0, -48) : param;
    Eigen::MatrixXcd a(2, 2);
    a << 1.0, 1.0, 0.0, 1.0 + eps;
    return a;
  }
  if (name == "ex3") {
    const double sigma = param == 0.0 ? 1.0 : param;
    return sigma * gallery_a0();
  }
  if (name == "ex4") {
    const double sigma = param == 0.0 ? 1.0 : param;
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(8, 8);
    const int cols[8] = {6, 4, 2, 0, 7, 5, 3, 1};  // [e7 e5 e3 e1 e8 e6 e4 e2]
    for (int j = 0; j < 8; ++j) p(cols[j], j) = 1.0;
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(8, 8);
    d.topLeftCorner(4, 4) = gallery_a0();
    d.bottomRightCorner(4, 4) = gallery_a0();
    return sigma * (p * d * p.transpose());
  }
  throw std::invalid_argument("gallery: unknown name '" + name + "'");
}

}  // namespace vgamma
