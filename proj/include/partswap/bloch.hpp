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
 * Bloch-sphere parametrized pure qubits and the small tensor-product
 * primitives the swap machines and the signalling simulation are built on.
 *
 * Convention: |A(theta, phi)> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
 * The complement (barred) coordinates of (theta, phi) are the antipode
 * (pi - theta, phi + pi); a barred ket is an ordinary Bloch state evaluated
 * at barred coordinates.
 */
#pragma once

#include <array>
#include <complex>
#include <numbers>

namespace partswap {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Distance from a pole below which a point counts as degenerate.
inline constexpr double kPoleTolerance = 1e-12;
/// Normalization tolerance carried by every state type.
inline constexpr double kNormTolerance = 1e-12;

/// Reduces an angle into [0, 2pi).
[[nodiscard]] double wrap_phase(double phi);

/// Minimal distance between two angles on the circle, in [0, pi].
[[nodiscard]] double circular_distance(double a, double b);

/// A point (theta, phi) on the Bloch sphere. theta in [0, pi], phi kept
/// in [0, 2pi). At the poles phi has no physical meaning; it is stored
/// verbatim and the point reports itself as degenerate.
class BlochAngles {
 public:
  /// Throws InvalidArgument on non-finite input or theta outside [0, pi].
  BlochAngles(double theta, double phi);

  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] double phi() const noexcept { return phi_; }
  [[nodiscard]] bool degenerate() const noexcept;

  friend bool operator==(const BlochAngles&, const BlochAngles&) = default;

 private:
  double theta_;
  double phi_;
};

/// Normalized single-qubit ket (a0, a1).
struct PureQubit {
  cplx a0;
  cplx a1;

  [[nodiscard]] double norm() const;
};

/// Two-qubit ket, amps[2*i + j] for |i>_q0 |j>_q1.
struct TwoQubitState {
  std::array<cplx, 4> amps{};

  [[nodiscard]] double norm() const;
};

/// Orthonormal qubit basis {up, down}. Each vector remembers the Bloch
/// coordinates it was built from, since the swap machines act on
/// coordinates rather than amplitudes.
class QubitBasis {
 public:
  /// Basis {A(up), A(down)}. Throws InvalidArgument unless orthogonal.
  QubitBasis(const BlochAngles& up, const BlochAngles& down);

  /// {A(a), A(complement_angles(a))}.
  [[nodiscard]] static QubitBasis from_angles(const BlochAngles& a);
  /// {|0>, |1>} realized as A(0, 0) and A(pi, 0).
  [[nodiscard]] static QubitBasis computational();

  [[nodiscard]] const PureQubit& up() const noexcept { return up_; }
  [[nodiscard]] const PureQubit& down() const noexcept { return down_; }
  [[nodiscard]] const BlochAngles& up_angles() const noexcept { return up_angles_; }
  [[nodiscard]] const BlochAngles& down_angles() const noexcept { return down_angles_; }
  [[nodiscard]] bool degenerate() const noexcept {
    return up_angles_.degenerate() || down_angles_.degenerate();
  }

 private:
  BlochAngles up_angles_;
  BlochAngles down_angles_;
  PureQubit up_;
  PureQubit down_;
};

[[nodiscard]] PureQubit state_from_angles(const BlochAngles& angles);

/// Antipodal coordinates (pi - theta, phi + pi mod 2pi).
[[nodiscard]] BlochAngles complement_angles(const BlochAngles& angles);

/// <x|y>, antilinear in the first argument.
[[nodiscard]] cplx inner_product(const PureQubit& x, const PureQubit& y);

/// Closed form of <A(p)|A(q)>:
/// cos(tp/2)cos(tq/2) + e^{i(phi_q - phi_p)} sin(tp/2)sin(tq/2).
[[nodiscard]] cplx angles_inner_product(const BlochAngles& p, const BlochAngles& q);

[[nodiscard]] TwoQubitState tensor(const PureQubit& x, const PureQubit& y);

[[nodiscard]] cplx inner_product(const TwoQubitState& x, const TwoQubitState& y);

/// |<x|y>|^2 for normalized kets; insensitive to global phase.
[[nodiscard]] double fidelity(const PureQubit& x, const PureQubit& y);

}  // namespace partswap
