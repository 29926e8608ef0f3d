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
 * Twin-singlet signalling experiment.
 *
 * Alice and Bob share |chi>|chi>, chi = (|u d> - |d u>)/sqrt(2) in any
 * orthonormal basis {u, d}. Qubits are ordered (A1, B1, A2, B2), so the
 * amplitude of |a1 b1 a2 b2> sits at index 8 a1 + 4 b1 + 2 a2 + b2 and
 * Alice's reduced index is 2 a1 + a2.
 *
 * Expanded in a basis {u, d} and grouped by Alice pair x Bob pair:
 *
 *   |chi>|chi> = 1/2 [ +(u u)_A (d d)_B + (d d)_A (u u)_B
 *                      -(u d)_A (d u)_B - (d u)_A (u d)_B ]
 *
 * The hypothetical machine is applied term by term: Alice pairs (u u) and
 * (d d) pass through, the mixed pairs are replaced by the machine output
 * on their Bloch coordinates. Because that rewrite depends on the basis
 * used for the expansion, Alice's reduced state can depend on which basis
 * Bob measures in, which is the signalling witness reported here.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "partswap/bloch.hpp"
#include "partswap/swap_maps.hpp"

namespace partswap {

inline constexpr double kDefaultSignallingThreshold = 1e-8;

struct FourQubitState {
  std::array<cplx, 16> amps{};

  [[nodiscard]] static constexpr std::size_t index(int a1, int b1, int a2, int b2) noexcept {
    return static_cast<std::size_t>(8 * a1 + 4 * b1 + 2 * a2 + b2);
  }
  [[nodiscard]] double norm() const;
};

[[nodiscard]] cplx inner_product(const FourQubitState& x, const FourQubitState& y);

/// Alice's 4x4 reduced state over (A1, A2), row/column index 2 a1 + a2.
struct DensityMatrix4 {
  Eigen::Matrix4cd entries = Eigen::Matrix4cd::Zero();

  [[nodiscard]] static DensityMatrix4 maximally_mixed();
};

/// Empty when the matrix is Hermitian (1e-12), unit trace (1e-12) and
/// PSD (eigenvalues >= -1e-10); otherwise a description of the failure.
[[nodiscard]] std::optional<std::string> density_matrix_defect(const DensityMatrix4& rho);

/// Throws NumericalError when density_matrix_defect reports a failure.
void validate(const DensityMatrix4& rho);

/// The rewrite applied to Alice's mixed pairs.
enum class Machine {
  Identity,
  PhaseSwap,
  AzimuthalSwap,
  /// Azimuthal swap whose second output keeps the first input's phase:
  /// (t1, p1), (t2, p2) -> (t2, p1), (t1, p1). An alternative reading kept
  /// for comparison only.
  AzimuthalSwapSharedPhase,
};

[[nodiscard]] Machine machine_for(SwapKind kind) noexcept;
[[nodiscard]] std::string_view to_string(Machine machine) noexcept;

/// Output coordinates of the machine on one Alice pair.
[[nodiscard]] StatePair apply_machine(Machine machine, const StatePair& pair);

/// (|up>|down> - |down>|up>)/sqrt(2). Throws InvalidArgument when the
/// basis is not orthonormal.
[[nodiscard]] TwoQubitState singlet_in_basis(const QubitBasis& basis);

[[nodiscard]] FourQubitState twin_singlet(const QubitBasis& basis);

struct TermwiseResult {
  FourQubitState state;               ///< renormalized
  double pre_normalization_norm = 1;  ///< norm of the raw rewrite
  bool degenerate = false;            ///< basis touches a pole
};

[[nodiscard]] TermwiseResult apply_machine_termwise(Machine machine,
                                                    const QubitBasis& decomposition_basis);
[[nodiscard]] TermwiseResult apply_machine_termwise(SwapKind kind,
                                                    const QubitBasis& decomposition_basis);

struct BobOutcome {
  int up1;  ///< 0 for basis up on B1, 1 for down
  int up2;
  double probability;
  std::array<cplx, 4> alice_state;  ///< normalized; zero when probability is 0
};

/// The four product outcomes of Bob measuring (B1, B2) in bob_basis.
[[nodiscard]] std::array<BobOutcome, 4> bob_outcomes(const FourQubitState& state,
                                                     const QubitBasis& bob_basis);

/// Probability-weighted mixture of Alice's conditional states.
/// Throws NumericalError when the state is not normalized.
[[nodiscard]] DensityMatrix4 alice_mixture_after_bob_measurement(const FourQubitState& state,
                                                                 const QubitBasis& bob_basis);

/// (1/2) sum |eigenvalues(a - b)|.
[[nodiscard]] double trace_distance(const DensityMatrix4& a, const DensityMatrix4& b);

struct ExperimentOptions {
  /// Bob's measurement basis in each arm; defaults to the machine's
  /// decomposition basis of that arm.
  std::optional<QubitBasis> bob_basis1;
  std::optional<QubitBasis> bob_basis2;
};

struct SignallingReport {
  Machine machine;
  DensityMatrix4 rho_b1;
  DensityMatrix4 rho_b2;
  double trace_distance;
  bool signalling;  ///< trace_distance > threshold
  double pre_normalization_norm_b1;
  double pre_normalization_norm_b2;
  std::vector<std::string> degenerate_flags;  ///< e.g. "basis1", "bob_basis2"
};

/// Arm k: the machine is applied in the basis_k decomposition and Bob
/// measures in basis_k (or the override). Throws InvalidArgument unless
/// threshold is positive.
[[nodiscard]] SignallingReport run_signalling_experiment(
    Machine machine, const QubitBasis& basis1, const QubitBasis& basis2,
    double threshold = kDefaultSignallingThreshold, const ExperimentOptions& options = {});
[[nodiscard]] SignallingReport run_signalling_experiment(
    SwapKind kind, const QubitBasis& basis1, const QubitBasis& basis2,
    double threshold = kDefaultSignallingThreshold, const ExperimentOptions& options = {});

struct SweepOptions {
  Machine machine = Machine::PhaseSwap;
  std::size_t pair_count = 1000;
  std::uint64_t seed = 0;
  /// Bases with |theta - pi/2| below this are redrawn.
  double equatorial_exclusion = 1e-3;
  unsigned threads = 0;
};

struct SweepSample {
  BlochAngles basis1;
  BlochAngles basis2;
  double trace_distance;
};

/// Bloch-uniform random basis pairs; sample k depends only on (seed, k).
[[nodiscard]] std::vector<SweepSample> run_signalling_sweep(const SweepOptions& options);

}  // namespace partswap
