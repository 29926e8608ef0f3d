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

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "feasibility_lane.hpp"

namespace partswap::kernels {

namespace {

#define PARTSWAP_AVX2 __attribute__((target("avx2")))

PARTSWAP_AVX2 inline __m256d load(const std::vector<double>& v, std::size_t k) {
  return _mm256_loadu_pd(v.data() + k);
}

PARTSWAP_AVX2 inline void store(std::vector<double>& v, std::size_t k, __m256d x) {
  _mm256_storeu_pd(v.data() + k, x);
}

}  // namespace

PARTSWAP_AVX2 void feasibility_avx2(const FeasibilityLanes& in, FeasibilityResults& out,
                                    std::size_t begin, std::size_t end) {
  constexpr std::size_t kWidth = 4;
  std::size_t k = begin;
  for (; k + kWidth <= end; k += kWidth) {
    const __m256d p = _mm256_mul_pd(load(in.c1, k), load(in.c2, k));
    const __m256d s = _mm256_mul_pd(load(in.s1, k), load(in.s2, k));
    const __m256d pb = _mm256_mul_pd(load(in.cb1, k), load(in.cb2, k));
    const __m256d sb = _mm256_mul_pd(load(in.sb1, k), load(in.sb2, k));
    const __m256d cd = load(in.cos_dphi, k);
    const __m256d sd = load(in.sin_dphi, k);
    const __m256d cdb = load(in.cos_dphi_bar, k);
    const __m256d sdb = load(in.sin_dphi_bar, k);

    const __m256d in1_re = _mm256_add_pd(p, _mm256_mul_pd(cd, s));
    const __m256d in1_im = _mm256_mul_pd(sd, s);
    const __m256d in2_re = _mm256_add_pd(pb, _mm256_mul_pd(cdb, sb));
    const __m256d in2_im = _mm256_mul_pd(sdb, sb);
    const __m256d out1_re = _mm256_add_pd(p, _mm256_mul_pd(cdb, s));
    const __m256d out1_im = _mm256_mul_pd(sdb, s);
    const __m256d out2_re = _mm256_add_pd(pb, _mm256_mul_pd(cd, sb));
    const __m256d out2_im = _mm256_mul_pd(sd, sb);

    const __m256d lhs_re =
        _mm256_sub_pd(_mm256_mul_pd(in1_re, in2_re), _mm256_mul_pd(in1_im, in2_im));
    const __m256d lhs_im =
        _mm256_add_pd(_mm256_mul_pd(in1_re, in2_im), _mm256_mul_pd(in1_im, in2_re));
    const __m256d rhs_re =
        _mm256_sub_pd(_mm256_mul_pd(out1_re, out2_re), _mm256_mul_pd(out1_im, out2_im));
    const __m256d rhs_im =
        _mm256_add_pd(_mm256_mul_pd(out1_re, out2_im), _mm256_mul_pd(out1_im, out2_re));

    const __m256d d_re = _mm256_sub_pd(lhs_re, rhs_re);
    const __m256d d_im = _mm256_sub_pd(lhs_im, rhs_im);
    const __m256d cross = _mm256_sub_pd(_mm256_mul_pd(s, pb), _mm256_mul_pd(p, sb));

    store(out.lhs_re, k, lhs_re);
    store(out.lhs_im, k, lhs_im);
    store(out.rhs_re, k, rhs_re);
    store(out.rhs_im, k, rhs_im);
    store(out.residual, k,
          _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(d_re, d_re), _mm256_mul_pd(d_im, d_im))));
    store(out.cross, k, cross);
    store(out.factored_re, k, _mm256_mul_pd(_mm256_sub_pd(cd, cdb), cross));
    store(out.factored_im, k, _mm256_mul_pd(_mm256_sub_pd(sd, sdb), cross));
  }
  for (; k < end; ++k) detail::feasibility_lane(in, out, k);
}

#undef PARTSWAP_AVX2

}  // namespace partswap::kernels

#endif
