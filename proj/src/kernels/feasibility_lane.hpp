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

#pragma once

// Single-lane body shared by the scalar kernel and the SIMD tails. The
// operation order here is the reference every vector variant mirrors.

#include <cmath>
#include <cstddef>

#include "partswap/kernels/feasibility_kernel.hpp"

namespace partswap::kernels::detail {

inline void feasibility_lane(const FeasibilityLanes& in, FeasibilityResults& out, std::size_t k) {
  const double p = in.c1[k] * in.c2[k];
  const double s = in.s1[k] * in.s2[k];
  const double pb = in.cb1[k] * in.cb2[k];
  const double sb = in.sb1[k] * in.sb2[k];

  // <A(t1,p1)|A(t2,p2)> and <A(tb1,pb1)|A(tb2,pb2)>
  const double in1_re = p + in.cos_dphi[k] * s;
  const double in1_im = in.sin_dphi[k] * s;
  const double in2_re = pb + in.cos_dphi_bar[k] * sb;
  const double in2_im = in.sin_dphi_bar[k] * sb;
  // Output pairs trade their phase differences.
  const double out1_re = p + in.cos_dphi_bar[k] * s;
  const double out1_im = in.sin_dphi_bar[k] * s;
  const double out2_re = pb + in.cos_dphi[k] * sb;
  const double out2_im = in.sin_dphi[k] * sb;

  const double lhs_re = in1_re * in2_re - in1_im * in2_im;
  const double lhs_im = in1_re * in2_im + in1_im * in2_re;
  const double rhs_re = out1_re * out2_re - out1_im * out2_im;
  const double rhs_im = out1_re * out2_im + out1_im * out2_re;

  const double d_re = lhs_re - rhs_re;
  const double d_im = lhs_im - rhs_im;
  const double cross = s * pb - p * sb;

  out.lhs_re[k] = lhs_re;
  out.lhs_im[k] = lhs_im;
  out.rhs_re[k] = rhs_re;
  out.rhs_im[k] = rhs_im;
  out.residual[k] = std::sqrt(d_re * d_re + d_im * d_im);
  out.cross[k] = cross;
  out.factored_re[k] = (in.cos_dphi[k] - in.cos_dphi_bar[k]) * cross;
  out.factored_im[k] = (in.sin_dphi[k] - in.sin_dphi_bar[k]) * cross;
}

}  // namespace partswap::kernels::detail
