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

#include "partswap/bloch.hpp"

#include <cmath>
#include <sstream>

#include "partswap/errors.hpp"

namespace partswap {

double wrap_phase(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double circular_distance(double a, double b) {
  const double d = wrap_phase(a - b);
  return d > kPi ? kTwoPi - d : d;
}

BlochAngles::BlochAngles(double theta, double phi) : theta_(theta), phi_(0.0) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    std::ostringstream msg;
    msg << "Bloch angles must be finite, got (" << theta << ", " << phi << ")";
    throw InvalidArgument(msg.str());
  }
  if (theta < 0.0 || theta > kPi) {
    std::ostringstream msg;
    msg << "theta must lie in [0, pi], got " << theta;
    throw InvalidArgument(msg.str());
  }
  phi_ = wrap_phase(phi);
}

bool BlochAngles::degenerate() const noexcept {
  return theta_ <= kPoleTolerance || theta_ >= kPi - kPoleTolerance;
}

double PureQubit::norm() const { return std::sqrt(std::norm(a0) + std::norm(a1)); }

double TwoQubitState::norm() const {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  return std::sqrt(acc);
}

PureQubit state_from_angles(const BlochAngles& angles) {
  const double half = 0.5 * angles.theta();
  return {cplx(std::cos(half), 0.0), std::polar(std::sin(half), angles.phi())};
}

BlochAngles complement_angles(const BlochAngles& angles) {
  return {kPi - angles.theta(), angles.phi() + kPi};
}

cplx inner_product(const PureQubit& x, const PureQubit& y) {
  return std::conj(x.a0) * y.a0 + std::conj(x.a1) * y.a1;
}

cplx angles_inner_product(const BlochAngles& p, const BlochAngles& q) {
  const double hp = 0.5 * p.theta();
  const double hq = 0.5 * q.theta();
  return std::cos(hp) * std::cos(hq) +
         std::polar(std::sin(hp) * std::sin(hq), q.phi() - p.phi());
}

TwoQubitState tensor(const PureQubit& x, const PureQubit& y) {
  return {{x.a0 * y.a0, x.a0 * y.a1, x.a1 * y.a0, x.a1 * y.a1}};
}

cplx inner_product(const TwoQubitState& x, const TwoQubitState& y) {
  cplx acc{};
  for (std::size_t k = 0; k < x.amps.size(); ++k) acc += std::conj(x.amps[k]) * y.amps[k];
  return acc;
}

double fidelity(const PureQubit& x, const PureQubit& y) { return std::norm(inner_product(x, y)); }

QubitBasis::QubitBasis(const BlochAngles& up, const BlochAngles& down)
    : up_angles_(up),
      down_angles_(down),
      up_(state_from_angles(up)),
      down_(state_from_angles(down)) {
  if (std::abs(inner_product(up_, down_)) > kNormTolerance) {
    std::ostringstream msg;
    msg << "basis vectors at (" << up.theta() << ", " << up.phi() << ") and (" << down.theta()
        << ", " << down.phi() << ") are not orthogonal";
    throw InvalidArgument(msg.str());
  }
}

QubitBasis QubitBasis::from_angles(const BlochAngles& a) { return {a, complement_angles(a)}; }

QubitBasis QubitBasis::computational() { return {BlochAngles(0.0, 0.0), BlochAngles(kPi, 0.0)}; }

}  // namespace partswap
