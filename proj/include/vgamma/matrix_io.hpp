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

#ifndef VGAMMA_MATRIX_IO_HPP
#define VGAMMA_MATRIX_IO_HPP

#include <iosfwd>
#include <string>

#include "vgamma/driver.hpp"
#include "vgamma/interval.hpp"

// Matrix ingestion (Matrix Market array/coordinate and a JSON array format)
// and the JSON run report. Report numbers are serialized as hex-float
// strings for bit-exact round trips, with decimal mirrors for reading.

namespace vgamma {

// Dispatches on extension: .mtx -> Matrix Market, .json -> JSON.
Eigen::MatrixXcd read_matrix(const std::string& path);

Eigen::MatrixXcd read_matrix_market(std::istream& in);
void write_matrix_market(std::ostream& out, const Eigen::MatrixXcd& m);

// JSON matrix: either a 2-D array (entries numbers or [re, im] pairs) or an
// object with a "matrix" member holding one.
Eigen::MatrixXcd read_matrix_json(std::istream& in);

// Report schema: {n, method, status, spectrum_verified, rr, rr_hex,
// mid, rad, mid_hex, rad_hex, timings{vbd, guard, blocks, reassembly, total}}.
std::string report_to_json(const GammaResult& result, Eigen::Index n);

// Bit-exact enclosure recovery from a report (mid_hex / rad_hex).
IntervalMatrix read_report_enclosure(std::istream& in);

std::string format_report_text(const GammaResult& result, Eigen::Index n);

}  // namespace vgamma

#endif  // VGAMMA_MATRIX_IO_HPP
