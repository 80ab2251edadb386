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

#ifndef VGAMMA_PARALLEL_HPP
#define VGAMMA_PARALLEL_HPP

namespace vgamma::par {

// Thread cap for the OpenMP kernels; 1 disables parallel regions.
// Results are identical for any thread count (each output entry is computed
// by exactly one thread with a fixed sequential inner loop).
int max_threads();
void set_max_threads(int n);

}  // namespace vgamma::par

#endif  // VGAMMA_PARALLEL_HPP
