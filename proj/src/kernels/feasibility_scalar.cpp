// Copyright 2026 The partswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "feasibility_lane.hpp"

namespace partswap::kernels {

void FeasibilityLanes::resize(std::size_t n) {
  for (auto* v : {&c1, &s1, &c2, &s2, &cb1, &sb1, &cb2, &sb2, &cos_dphi, &sin_dphi,
                  &cos_dphi_bar, &sin_dphi_bar}) {
    v->resize(n);
  }
}

void FeasibilityResults::resize(std::size_t n) {
  for (auto* v : {&lhs_re, &lhs_im, &rhs_re, &rhs_im, &residual, &cross, &factored_re,
                  &factored_im}) {
    v->resize(n);
  }
}

void feasibility_scalar(const FeasibilityLanes& in, FeasibilityResults& out, std::size_t begin,
                        std::size_t end) {
  for (std::size_t k = begin; k < end; ++k) detail::feasibility_lane(in, out, k);
}

}  // namespace partswap::kernels
