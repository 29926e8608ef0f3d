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
 * Unitarity test for the partial-swap machines on a two-element set of
 * state pairs. A machine mapping
 *
 *   |A(t1,p1)>|A(tb1,pb1)>  and  |A(t2,p2)>|A(tb2,pb2)>
 *
 * can be extended to a unitary only if it preserves the inner product of
 * the two input kets. For both machines the defect factorizes as
 *
 *   lhs - rhs = (e^{i dphi} - e^{i dphibar}) * (s1 s2 cb1 cb2 - c1 c2 sb1 sb2)
 *
 * with s = sin(t/2), c = cos(t/2), dphi = p2 - p1, dphibar = pb2 - pb1, so
 * the machine is admissible exactly when one of the two factors vanishes:
 *
 *   (i)  tan(t1/2) tan(t2/2) = tan(tb1/2) tan(tb2/2)
 *   (ii) p2 - p1 = pb2 - pb1  (mod 2pi)
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "partswap/bloch.hpp"
#include "partswap/swap_maps.hpp"

namespace partswap {

inline constexpr double kDefaultTolerance = 1e-9;

/// Condition tolerances are the residual tolerance divided by this factor.
/// The residual is a product of a unit-scale factor and one of the two
/// condition deviations, and |e^{ia} - e^{ib}| <= |a - b|, |cross| <= 1, so
/// a condition met at tol/4 keeps the residual below tol/2.
inline constexpr double kToleranceCoupling = 4.0;

/// The eight angles of the two input pairs plus the machine under test.
struct FeasibilityInput {
  SwapKind kind;
  BlochAngles angles1;
  BlochAngles angles2;
  BlochAngles bar1;
  BlochAngles bar2;

  /// Barred angles taken as the antipodes of the unbarred ones.
  [[nodiscard]] static FeasibilityInput antipodal(SwapKind kind, const BlochAngles& a1,
                                                  const BlochAngles& a2);

  [[nodiscard]] StatePair pair1() const { return {angles1, bar1}; }
  [[nodiscard]] StatePair pair2() const { return {angles2, bar2}; }
  [[nodiscard]] bool degenerate() const noexcept;
};

struct FeasibilityReport {
  FeasibilityInput input;
  cplx lhs;                ///< <in1|in2>
  cplx rhs;                ///< <out1|out2>
  double residual;         ///< |lhs - rhs|
  cplx factored_residual;  ///< closed-form lhs - rhs
  bool condition_i;
  bool condition_ii;
  bool unitary_extendable;  ///< residual < tol
  bool degenerate;
};

/// Evaluates the inner-product defect from explicitly constructed kets.
/// Conditions are judged at tol / kToleranceCoupling.
/// Throws InvalidArgument if tol is not positive and finite.
[[nodiscard]] FeasibilityReport check_feasibility(const FeasibilityInput& input,
                                                  double tol = kDefaultTolerance);

/// Cross-multiplied (pole-safe) form of condition (i).
[[nodiscard]] bool condition_i(double theta1, double theta2, double bar_theta1, double bar_theta2,
                               double tol);
/// s1 s2 cb1 cb2 - c1 c2 sb1 sb2; zero exactly when condition (i) holds.
[[nodiscard]] double condition_i_defect(double theta1, double theta2, double bar_theta1,
                                        double bar_theta2);

/// Congruence of the two phase differences modulo 2pi, by circular distance.
[[nodiscard]] bool condition_ii(double phi1, double phi2, double bar_phi1, double bar_phi2,
                                double tol);

/// Closed-form value of lhs - rhs (identical for both machines).
[[nodiscard]] cplx factored_difference(const FeasibilityInput& input);

struct GramVerdict {
  bool extendable;
  double max_deviation;
  /// Entry (i, j) attaining max_deviation; set when extendable is false.
  std::optional<std::pair<std::size_t, std::size_t>> worst_entry;
};

/// Gram-matrix criterion: a unitary V with V|in_k> = |out_k> exists iff
/// <in_i|in_j> = <out_i|out_j> for all i, j.
/// Throws InvalidArgument on empty or mismatched lists and NumericalError
/// when a state is not normalized within kNormTolerance.
[[nodiscard]] GramVerdict unitary_extension_check(std::span<const TwoQubitState> inputs,
                                                  std::span<const TwoQubitState> outputs,
                                                  double tol = kDefaultTolerance);

[[nodiscard]] bool unitary_extension_exists(std::span<const TwoQubitState> inputs,
                                            std::span<const TwoQubitState> outputs,
                                            double tol = kDefaultTolerance);

enum class BarMode { Antipodal, Independent };

[[nodiscard]] std::string_view to_string(BarMode mode) noexcept;
[[nodiscard]] BarMode parse_bar_mode(std::string_view name);

struct ScanOptions {
  SwapKind kind = SwapKind::Phase;
  std::size_t sample_count = 1;
  std::uint64_t seed = 0;
  BarMode bar_mode = BarMode::Antipodal;
  double tol = kDefaultTolerance;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Samples the feasible set on the Bloch sphere. Sample k depends only on
/// (seed, k), so the output is identical for any thread count.
[[nodiscard]] std::vector<FeasibilityReport> scan_feasible_set(const ScanOptions& options);

[[nodiscard]] double feasible_fraction(std::span<const FeasibilityReport> reports);

}  // namespace partswap
