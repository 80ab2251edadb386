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

#include "vgamma/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vgamma {

namespace {

std::string hex_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double parse_hex(const std::string& s) {
  const char* c = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(c, &end);
  if (end == c) throw std::runtime_error("report: malformed hex-float '" + s + "'");
  return v;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Eigen::MatrixXcd read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("mtx: empty file");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix")
    throw std::runtime_error("mtx: missing %%MatrixMarket matrix banner");
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry.empty() ? std::string("general") : symmetry);
  if (format != "array" && format != "coordinate")
    throw std::runtime_error("mtx: format must be array or coordinate, got " + format);
  if (field != "real" && field != "integer" && field != "complex")
    throw std::runtime_error("mtx: field must be real, integer or complex, got " + field);
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "hermitian" &&
      symmetry != "skew-symmetric")
    throw std::runtime_error("mtx: unsupported symmetry " + symmetry);
  const bool complex_field = field == "complex";

  // skip comments
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream head(line);
  long rows = 0, cols = 0, nnz = 0;
  if (format == "array") {
    if (!(head >> rows >> cols)) throw std::runtime_error("mtx: bad size line");
  } else {
    if (!(head >> rows >> cols >> nnz)) throw std::runtime_error("mtx: bad size line");
  }
  if (rows <= 0 || cols <= 0) throw std::runtime_error("mtx: nonpositive dimensions");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);

  const auto apply_sym = [&](long i, long j, Complex v) {
    m(i, j) = v;
    if (i != j) {
      if (symmetry == "symmetric") m(j, i) = v;
      if (symmetry == "hermitian") m(j, i) = std::conj(v);
      if (symmetry == "skew-symmetric") m(j, i) = -v;
    }
  };

  if (format == "array") {
    // column-major; symmetric variants store the lower triangle
    for (long j = 0; j < cols; ++j) {
      const long i0 = symmetry == "general" ? 0 : j;
      for (long i = i0; i < rows; ++i) {
        double re = 0, im = 0;
        if (!(in >> re)) throw std::runtime_error("mtx: truncated data");
        if (complex_field && !(in >> im)) throw std::runtime_error("mtx: truncated data");
        apply_sym(i, j, Complex{re, im});
      }
    }
  } else {
    for (long e = 0; e < nnz; ++e) {
      long i = 0, j = 0;
      double re = 0, im = 0;
      if (!(in >> i >> j >> re)) throw std::runtime_error("mtx: truncated entry");
      if (complex_field && !(in >> im)) throw std::runtime_error("mtx: truncated entry");
      if (i < 1 || i > rows || j < 1 || j > cols)
        throw std::runtime_error("mtx: index out of range at entry " + std::to_string(e + 1));
      apply_sym(i - 1, j - 1, Complex{re, im});
    }
  }
  return m;
}

void write_matrix_market(std::ostream& out, const Eigen::MatrixXcd& m) {
  const bool is_real = (m.imag().cwiseAbs().maxCoeff() == 0.0);
  out << "%%MatrixMarket matrix array " << (is_real ? "real" : "complex") << " general\n";
  out << m.rows() << " " << m.cols() << "\n";
  char buf[64];
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (is_real) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", m(i, j).real());
        out << buf;
      } else {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", m(i, j).real(), m(i, j).imag());
        out << buf;
      }
    }
}

Eigen::MatrixXcd read_matrix_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  if (j.is_object()) {
    if (!j.contains("matrix")) throw std::runtime_error("json matrix: missing 'matrix' member");
    j = j["matrix"];
  }
  if (!j.is_array() || j.empty()) throw std::runtime_error("json matrix: expected a 2-D array");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw std::runtime_error("json matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[i][c];
      if (e.is_number()) {
        m(i, c) = Complex{e.get<double>(), 0.0};
      } else if (e.is_array() && e.size() == 2) {
        m(i, c) = Complex{e[0].get<double>(), e[1].get<double>()};
      } else {
        throw std::runtime_error("json matrix: entries must be numbers or [re, im]");
      }
    }
  }
  return m;
}

Eigen::MatrixXcd read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  if (path.size() >= 5 && lower(path.substr(path.size() - 5)) == ".json")
    return read_matrix_json(in);
  return read_matrix_market(in);
}

std::string report_to_json(const GammaResult& result, Eigen::Index n) {
  nlohmann::json j;
  j["n"] = n;
  j["method"] = to_string(result.method);
  j["status"] = to_string(result.status);
  j["spectrum_verified"] = result.spectrum_verified;
  if (!result.message.empty()) j["message"] = result.message;
  j["timings"] = {{"vbd", result.timings.vbd},
                  {"guard", result.timings.guard},
                  {"blocks", result.timings.blocks},
                  {"reassembly", result.timings.reassembly},
                  {"total", result.timings.total}};
  if (result.status == RunStatus::Ok) {
    j["rr"] = result.rr;
    j["rr_hex"] = hex_double(result.rr);
    const auto& enc = result.enclosure;
    nlohmann::json mid = nlohmann::json::array(), rad = nlohmann::json::array();
    nlohmann::json mid_hex = nlohmann::json::array(), rad_hex = nlohmann::json::array();
    for (Eigen::Index i = 0; i < enc.rows(); ++i) {
      nlohmann::json mrow = nlohmann::json::array(), rrow = nlohmann::json::array();
      nlohmann::json mhrow = nlohmann::json::array(), rhrow = nlohmann::json::array();
      for (Eigen::Index c = 0; c < enc.cols(); ++c) {
        mrow.push_back({enc.mid(i, c).real(), enc.mid(i, c).imag()});
        rrow.push_back(enc.rad(i, c));
        mhrow.push_back({hex_double(enc.mid(i, c).real()), hex_double(enc.mid(i, c).imag())});
        rhrow.push_back(hex_double(enc.rad(i, c)));
      }
      mid.push_back(mrow);
      rad.push_back(rrow);
      mid_hex.push_back(mhrow);
      rad_hex.push_back(rhrow);
    }
    j["mid"] = mid;
    j["rad"] = rad;
    j["mid_hex"] = mid_hex;
    j["rad_hex"] = rad_hex;
  }
  return j.dump(2);
}

IntervalMatrix read_report_enclosure(std::istream& in) {
  nlohmann::json j;
  in >> j;
  if (!j.contains("mid_hex") || !j.contains("rad_hex"))
    throw std::runtime_error("report: no enclosure present");
  const auto& mh = j["mid_hex"];
  const auto& rh = j["rad_hex"];
  const std::size_t rows = mh.size();
  const std::size_t cols = rows ? mh[0].size() : 0;
  IntervalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) {
      m.mid(i, c) = Complex{parse_hex(mh[i][c][0].get<std::string>()),
                            parse_hex(mh[i][c][1].get<std::string>())};
      m.rad(i, c) = parse_hex(rh[i][c].get<std::string>());
    }
  return m;
}

std::string format_report_text(const GammaResult& result, Eigen::Index n) {
  std::ostringstream out;
  out << "n: " << n << "\n";
  out << "method: " << to_string(result.method) << "\n";
  out << "status: " << to_string(result.status) << "\n";
  out << "spectrum_verified: " << (result.spectrum_verified ? "true" : "false") << "\n";
  if (!result.message.empty()) out << "message: " << result.message << "\n";
  char buf[128];
  if (result.status == RunStatus::Ok) {
    std::snprintf(buf, sizeof(buf), "rr: %.3e\n", result.rr);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "timings: vbd %.3fs, guard %.3fs, blocks %.3fs, reassembly %.3fs, total %.3fs\n",
                result.timings.vbd, result.timings.guard, result.timings.blocks,
                result.timings.reassembly, result.timings.total);
  out << buf;
  if (result.status == RunStatus::Ok && n <= 8) {
    out << "enclosure (mid +/- rad):\n";
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index c = 0; c < n; ++c) {
        const Complex m = result.enclosure.mid(i, c);
        std::snprintf(buf, sizeof(buf), "  (%.10g%+.10gi ~ %.2e)", m.real(), m.imag(),
                      result.enclosure.rad(i, c));
        out << buf;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace vgamma
