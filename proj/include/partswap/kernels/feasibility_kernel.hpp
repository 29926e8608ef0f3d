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

/**
 * @file
 * Batched closed-form evaluation of the inner-product defect, laid out as
 * structure-of-arrays so the scan can run it across SIMD lanes.
 *
 * Per lane, with P = c1 c2, S = s1 s2, Pb = cb1 cb2, Sb = sb1 sb2:
 *
 *   lhs = (P  + e^{i dphi}    S ) (Pb + e^{i dphibar} Sb)
 *   rhs = (P  + e^{i dphibar} S ) (Pb + e^{i dphi}    Sb)
 *
 * Both machines produce the same two output inner products (in opposite
 * order), so one kernel serves both.
 *
 * Every variant performs the same IEEE operations in the same order with
 * no fused multiply-add, so results are bit-identical across variants.
 */
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace partswap::kernels {

/// Half-angle trigonometry and phase-difference trigonometry per sample.
struct FeasibilityLanes {
  std::vector<double> c1, s1, c2, s2;      // cos/sin of theta_k / 2
  std::vector<double> cb1, sb1, cb2, sb2;  // cos/sin of bar_theta_k / 2
  std::vector<double> cos_dphi, sin_dphi;
  std::vector<double> cos_dphi_bar, sin_dphi_bar;

  void resize(std::size_t n);
  [[nodiscard]] std::size_t size() const noexcept { return c1.size(); }
};

struct FeasibilityResults {
  std::vector<double> lhs_re, lhs_im;
  std::vector<double> rhs_re, rhs_im;
  std::vector<double> residual;
  std::vector<double> cross;  // s1 s2 cb1 cb2 - c1 c2 sb1 sb2
  std::vector<double> factored_re, factored_im;

  void resize(std::size_t n);
  [[nodiscard]] std::size_t size() const noexcept { return residual.size(); }
};

enum class Isa { Scalar, Avx2, Neon };

[[nodiscard]] std::string_view to_string(Isa isa) noexcept;

/// Whether this build contains the variant and the running CPU supports it.
[[nodiscard]] bool isa_available(Isa isa) noexcept;

/// Widest available variant; chosen once per process.
[[nodiscard]] Isa best_isa() noexcept;

/// Evaluates lanes [begin, end). Outputs must already be sized.
void feasibility_scalar(const FeasibilityLanes& in, FeasibilityResults& out, std::size_t begin,
                        std::size_t end);
#if defined(__x86_64__) || defined(_M_X64)
void feasibility_avx2(const FeasibilityLanes& in, FeasibilityResults& out, std::size_t begin,
                      std::size_t end);
#endif
#if defined(__aarch64__)
void feasibility_neon(const FeasibilityLanes& in, FeasibilityResults& out, std::size_t begin,
                      std::size_t end);
#endif

/// Runs the requested variant. Throws InvalidArgument if it is unavailable.
void feasibility_batch(Isa isa, const FeasibilityLanes& in, FeasibilityResults& out,
                       std::size_t begin, std::size_t end);

/// Runs best_isa().
void feasibility_batch(const FeasibilityLanes& in, FeasibilityResults& out, std::size_t begin,
                       std::size_t end);

}  // namespace partswap::kernels
