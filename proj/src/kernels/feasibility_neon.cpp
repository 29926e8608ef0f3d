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

#if defined(__aarch64__)

#include <arm_neon.h>

#include "feasibility_lane.hpp"

namespace partswap::kernels {

// vmulq/vaddq/vsubq only: vfmaq would fuse and break bit-equality with
// the scalar reference.
void feasibility_neon(const FeasibilityLanes& in, FeasibilityResults& out, std::size_t begin,
                      std::size_t end) {
  constexpr std::size_t kWidth = 2;
  const auto ld = [](const std::vector<double>& v, std::size_t k) { return vld1q_f64(v.data() + k); };
  const auto st = [](std::vector<double>& v, std::size_t k, float64x2_t x) {
    vst1q_f64(v.data() + k, x);
  };
  std::size_t k = begin;
  for (; k + kWidth <= end; k += kWidth) {
    const float64x2_t p = vmulq_f64(ld(in.c1, k), ld(in.c2, k));
    const float64x2_t s = vmulq_f64(ld(in.s1, k), ld(in.s2, k));
    const float64x2_t pb = vmulq_f64(ld(in.cb1, k), ld(in.cb2, k));
    const float64x2_t sb = vmulq_f64(ld(in.sb1, k), ld(in.sb2, k));
    const float64x2_t cd = ld(in.cos_dphi, k);
    const float64x2_t sd = ld(in.sin_dphi, k);
    const float64x2_t cdb = ld(in.cos_dphi_bar, k);
    const float64x2_t sdb = ld(in.sin_dphi_bar, k);

    const float64x2_t in1_re = vaddq_f64(p, vmulq_f64(cd, s));
    const float64x2_t in1_im = vmulq_f64(sd, s);
    const float64x2_t in2_re = vaddq_f64(pb, vmulq_f64(cdb, sb));
    const float64x2_t in2_im = vmulq_f64(sdb, sb);
    const float64x2_t out1_re = vaddq_f64(p, vmulq_f64(cdb, s));
    const float64x2_t out1_im = vmulq_f64(sdb, s);
    const float64x2_t out2_re = vaddq_f64(pb, vmulq_f64(cd, sb));
    const float64x2_t out2_im = vmulq_f64(sd, sb);

    const float64x2_t lhs_re = vsubq_f64(vmulq_f64(in1_re, in2_re), vmulq_f64(in1_im, in2_im));
    const float64x2_t lhs_im = vaddq_f64(vmulq_f64(in1_re, in2_im), vmulq_f64(in1_im, in2_re));
    const float64x2_t rhs_re = vsubq_f64(vmulq_f64(out1_re, out2_re), vmulq_f64(out1_im, out2_im));
    const float64x2_t rhs_im = vaddq_f64(vmulq_f64(out1_re, out2_im), vmulq_f64(out1_im, out2_re));

    const float64x2_t d_re = vsubq_f64(lhs_re, rhs_re);
    const float64x2_t d_im = vsubq_f64(lhs_im, rhs_im);
    const float64x2_t cross = vsubq_f64(vmulq_f64(s, pb), vmulq_f64(p, sb));

    st(out.lhs_re, k, lhs_re);
    st(out.lhs_im, k, lhs_im);
    st(out.rhs_re, k, rhs_re);
    st(out.rhs_im, k, rhs_im);
    st(out.residual, k, vsqrtq_f64(vaddq_f64(vmulq_f64(d_re, d_re), vmulq_f64(d_im, d_im))));
    st(out.cross, k, cross);
    st(out.factored_re, k, vmulq_f64(vsubq_f64(cd, cdb), cross));
    st(out.factored_im, k, vmulq_f64(vsubq_f64(sd, sdb), cross));
  }
  for (; k < end; ++k) detail::feasibility_lane(in, out, k);
}

}  // namespace partswap::kernels

#endif
