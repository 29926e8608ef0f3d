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

#include "partswap/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "partswap/errors.hpp"

namespace partswap {

namespace {

void require_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    std::ostringstream msg;
    msg << "tolerance must be positive and finite, got " << tol;
    throw InvalidArgument(msg.str());
  }
}

void require_normalized(const TwoQubitState& s, std::string_view role, std::size_t index) {
  const double n = s.norm();
  if (!(std::abs(n - 1.0) <= kNormTolerance)) {
    std::ostringstream msg;
    msg << role << " state " << index << " has norm " << n << ", expected 1";
    throw NumericalError(msg.str());
  }
}

}  // namespace

FeasibilityInput FeasibilityInput::antipodal(SwapKind kind, const BlochAngles& a1,
                                             const BlochAngles& a2) {
  return {kind, a1, a2, complement_angles(a1), complement_angles(a2)};
}

bool FeasibilityInput::degenerate() const noexcept {
  return angles1.degenerate() || angles2.degenerate() || bar1.degenerate() ||
         bar2.degenerate();
}

double condition_i_defect(double theta1, double theta2, double bar_theta1, double bar_theta2) {
  const double s1 = std::sin(0.5 * theta1), c1 = std::cos(0.5 * theta1);
  const double s2 = std::sin(0.5 * theta2), c2 = std::cos(0.5 * theta2);
  const double sb1 = std::sin(0.5 * bar_theta1), cb1 = std::cos(0.5 * bar_theta1);
  const double sb2 = std::sin(0.5 * bar_theta2), cb2 = std::cos(0.5 * bar_theta2);
  return (s1 * s2) * (cb1 * cb2) - (c1 * c2) * (sb1 * sb2);
}

bool condition_i(double theta1, double theta2, double bar_theta1, double bar_theta2,
                 double tol) {
  return std::abs(condition_i_defect(theta1, theta2, bar_theta1, bar_theta2)) <= tol;
}

bool condition_ii(double phi1, double phi2, double bar_phi1, double bar_phi2, double tol) {
  return circular_distance(phi2 - phi1, bar_phi2 - bar_phi1) <= tol;
}

cplx factored_difference(const FeasibilityInput& in) {
  const double cross = condition_i_defect(in.angles1.theta(), in.angles2.theta(),
                                          in.bar1.theta(), in.bar2.theta());
  const cplx phase = std::polar(1.0, in.angles2.phi() - in.angles1.phi()) -
                     std::polar(1.0, in.bar2.phi() - in.bar1.phi());
  return phase * cross;
}

FeasibilityReport check_feasibility(const FeasibilityInput& input, double tol) {
  require_tolerance(tol);
  const auto ket = [](const BlochAngles& a) { return state_from_angles(a); };

  const cplx lhs = inner_product(ket(input.angles1), ket(input.angles2)) *
                   inner_product(ket(input.bar1), ket(input.bar2));

  const StatePair out1 = partial_swap(input.kind, input.pair1());
  const StatePair out2 = partial_swap(input.kind, input.pair2());
  const cplx rhs = inner_product(ket(out1.first), ket(out2.first)) *
                   inner_product(ket(out1.second), ket(out2.second));

  const double residual = std::abs(lhs - rhs);
  if (!std::isfinite(residual)) throw NumericalError("feasibility residual is not finite");

  const double ctol = tol / kToleranceCoupling;
  FeasibilityReport report{
      .input = input,
      .lhs = lhs,
      .rhs = rhs,
      .residual = residual,
      .factored_residual = factored_difference(input),
      .condition_i = condition_i(input.angles1.theta(), input.angles2.theta(),
                                 input.bar1.theta(), input.bar2.theta(), ctol),
      .condition_ii = condition_ii(input.angles1.phi(), input.angles2.phi(), input.bar1.phi(),
                                   input.bar2.phi(), ctol),
      .unitary_extendable = residual < tol,
      .degenerate = input.degenerate(),
  };
  return report;
}

GramVerdict unitary_extension_check(std::span<const TwoQubitState> inputs,
                                    std::span<const TwoQubitState> outputs, double tol) {
  require_tolerance(tol);
  if (inputs.empty()) throw InvalidArgument("state lists must not be empty");
  if (inputs.size() != outputs.size()) {
    std::ostringstream msg;
    msg << "got " << inputs.size() << " input states but " << outputs.size() << " outputs";
    throw InvalidArgument(msg.str());
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    require_normalized(inputs[i], "input", i);
    require_normalized(outputs[i], "output", i);
  }

  GramVerdict verdict{.extendable = true, .max_deviation = 0.0, .worst_entry = std::nullopt};
  std::pair<std::size_t, std::size_t> worst{0, 0};
  // Gram matrices are Hermitian; the upper triangle suffices.
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::size_t j = i; j < inputs.size(); ++j) {
      const double dev = std::abs(inner_product(inputs[i], inputs[j]) -
                                  inner_product(outputs[i], outputs[j]));
      if (!std::isfinite(dev)) throw NumericalError("Gram deviation is not finite");
      if (dev > verdict.max_deviation) {
        verdict.max_deviation = dev;
        worst = {i, j};
      }
    }
  }
  verdict.extendable = verdict.max_deviation < tol;
  if (!verdict.extendable) verdict.worst_entry = worst;
  return verdict;
}

bool unitary_extension_exists(std::span<const TwoQubitState> inputs,
                              std::span<const TwoQubitState> outputs, double tol) {
  return unitary_extension_check(inputs, outputs, tol).extendable;
}

std::string_view to_string(BarMode mode) noexcept {
  return mode == BarMode::Antipodal ? "antipodal" : "independent";
}

BarMode parse_bar_mode(std::string_view name) {
  if (name == "antipodal") return BarMode::Antipodal;
  if (name == "independent") return BarMode::Independent;
  throw InvalidArgument("unknown bar mode '" + std::string(name) +
                        "' (expected antipodal or independent)");
}

double feasible_fraction(std::span<const FeasibilityReport> reports) {
  if (reports.empty()) return 0.0;
  const auto n = std::count_if(reports.begin(), reports.end(),
                               [](const FeasibilityReport& r) { return r.unitary_extendable; });
  return static_cast<double>(n) / static_cast<double>(reports.size());
}

}  // namespace partswap
