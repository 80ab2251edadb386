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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "vgamma/driver.hpp"
#include "vgamma/gallery.hpp"
#include "vgamma/matrix_io.hpp"
#include "vgamma/parallel.hpp"

namespace {

// Exit codes: 0 ok, 1 usage/io error, 2 guard failure, 3 vbd failure,
// 4 block failure, 5 oracle comparison violation.
int status_exit_code(vgamma::RunStatus s) {
  switch (s) {
    case vgamma::RunStatus::Ok: return 0;
    case vgamma::RunStatus::GuardFailure: return 2;
    case vgamma::RunStatus::VbdFailure: return 3;
    default: return 4;
  }
}

std::vector<int> parse_hint(const std::string& hint) {
  std::vector<int> out;
  std::string cur;
  for (char c : hint + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

// Randomized functional-equation suite: a seeded diagonalizable matrix with
// spectrum clear of the nonpositive integers; checks that the enclosures of
// Gamma(A+I) and A Gamma(A) intersect elementwise.
int run_fe_suite(int n, std::uint64_t seed, const std::vector<int>& hint) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Eigen::MatrixXcd v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v(i, j) = vgamma::Complex{unit(rng), unit(rng)};
  v += 3.0 * Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = vgamma::Complex{0.5 + 4.5 * (unit(rng) + 1.0), unit(rng)};
  const Eigen::MatrixXcd a = v * d * v.inverse();

  const vgamma::GammaResult g = vgamma::gamma_auto(a, hint);
  if (g.status != vgamma::RunStatus::Ok) {
    std::cout << "fe-suite: base run failed (" << g.message << ")\n";
    return status_exit_code(g.status);
  }
  const vgamma::GammaResult gs =
      vgamma::gamma_auto(a + Eigen::MatrixXcd::Identity(n, n), hint);
  if (gs.status != vgamma::RunStatus::Ok) {
    std::cout << "fe-suite: shifted run failed (" << gs.message << ")\n";
    return status_exit_code(gs.status);
  }
  const bool ok =
      vgamma::intersects(gs.enclosure, vgamma::mat_mul(vgamma::IntervalMatrix(a), g.enclosure));
  std::cout << "fe-suite: n=" << n << " seed=" << seed << " "
            << (ok ? "PASS" : "FAIL (enclosures do not intersect)") << "\n";
  return ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigorous enclosures of the matrix gamma function"};

  std::string input, gallery, method = "auto", hint_str, format = "json";
  std::string output, dump_matrix, compare;
  int n = 0;
  double param = 0.0;
  int parallel = 0;
  std::uint64_t seed = 1;
  std::string suite;

  auto* in_opt = app.add_option("--input", input, "matrix file (.mtx or .json)");
  auto* gal_opt = app.add_option("--gallery", gallery,
                                 "gallery name: frank|gcdmat|minij|poisson|ex2|ex3|ex4");
  in_opt->excludes(gal_opt);
  gal_opt->excludes(in_opt);
  app.add_option("--n", n, "gallery size (grid side for poisson)");
  app.add_option("--param", param, "gallery parameter (eps for ex2, sigma for ex3/ex4)");
  app.add_option("--method", method, "spectral|jordan|auto")
      ->check(CLI::IsMember({"spectral", "jordan", "auto"}));
  app.add_option("--jordan-hint", hint_str, "comma-separated Jordan block sizes");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--parallel", parallel, "thread cap for the OpenMP kernels");
  app.add_option("--seed", seed, "seed for the randomized suites");
  app.add_option("--suite", suite, "randomized suite: fe")->check(CLI::IsMember({"fe"}));
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_option("--dump-matrix", dump_matrix, "write the ingested matrix as Matrix Market");
  app.add_option("--compare", compare,
                 "reference matrix file; exit 5 unless the enclosure contains it");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parallel > 0) vgamma::par::set_max_threads(parallel);

    if (!suite.empty()) {
      if (n < 1) {
        std::cerr << "error: --suite fe requires --n\n";
        return 1;
      }
      return run_fe_suite(n, seed, parse_hint(hint_str));
    }

    Eigen::MatrixXcd a;
    if (!input.empty()) {
      a = vgamma::read_matrix(input);
    } else if (!gallery.empty()) {
      if (n < 1 && gallery != "ex2" && gallery != "ex3" && gallery != "ex4") {
        std::cerr << "error: --gallery " << gallery << " requires --n\n";
        return 1;
      }
      a = vgamma::generate_gallery(gallery, n, param);
    } else {
      std::cerr << "error: exactly one of --input or --gallery is required\n";
      return 1;
    }

    if (!dump_matrix.empty()) {
      std::ofstream out(dump_matrix);
      if (!out) throw std::runtime_error("cannot write " + dump_matrix);
      vgamma::write_matrix_market(out, a);
    }

    const std::vector<int> hint = parse_hint(hint_str);
    vgamma::GammaResult res;
    if (method == "spectral")
      res = vgamma::gamma_spectral(a);
    else if (method == "jordan")
      res = vgamma::gamma_jordan(a, hint);
    else
      res = vgamma::gamma_auto(a, hint);

    const std::string report = format == "json" ? vgamma::report_to_json(res, a.rows())
                                                : vgamma::format_report_text(res, a.rows());
    if (!output.empty()) {
      std::ofstream out(output);
      if (!out) throw std::runtime_error("cannot write " + output);
      out << report << "\n";
    } else {
      std::cout << report << "\n";
    }

    int code = status_exit_code(res.status);
    if (code == 0 && !compare.empty()) {
      const Eigen::MatrixXcd ref = vgamma::read_matrix(compare);
      // slack for the reference's own double rounding
      const double scale = ref.cwiseAbs().maxCoeff();
      if (!res.enclosure.contains(ref, 4.0 * vgamma::rnd::kUnit * scale)) {
        std::cerr << "compare: reference matrix NOT contained in the enclosure\n";
        code = 5;
      } else {
        std::cerr << "compare: reference matrix contained in the enclosure\n";
      }
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
