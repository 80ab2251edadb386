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

#ifndef VGAMMA_ERRORS_HPP
#define VGAMMA_ERRORS_HPP

#include <stdexcept>

namespace vgamma {

// A rigorous enclosure could not be produced (pole inside a disc, AR product
// not verifiably nonsingular, jet unavailable). Never a silent wide result.
class EnclosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verification step failed: the statement may be true, but it was not
// proven (possibly singular interval matrix, no Krawczyk contraction).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vgamma

#endif  // VGAMMA_ERRORS_HPP
