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

#include "partswap/signalling.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "partswap/errors.hpp"
#include "partswap/sampling.hpp"

namespace partswap {

namespace {

using Ket = std::array<cplx, 2>;

Ket ket(const PureQubit& q) { return {q.a0, q.a1}; }
Ket ket(const BlochAngles& a) { return ket(state_from_angles(a)); }

/// Adds weight * |a1 b1 a2 b2> to state.
void add_product(FourQubitState& state, cplx weight, const Ket& a1, const Ket& b1, const Ket& a2,
                 const Ket& b2) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          state.amps[FourQubitState::index(i, j, k, l)] += weight * a1[i] * b1[j] * a2[k] * b2[l];
}

void require_orthonormal(const QubitBasis& basis) {
  const double nu = basis.up().norm();
  const double nd = basis.down().norm();
  const double overlap = std::abs(inner_product(basis.up(), basis.down()));
  if (std::abs(nu - 1.0) > kNormTolerance || std::abs(nd - 1.0) > kNormTolerance ||
      overlap > kNormTolerance) {
    throw InvalidArgument("basis is not orthonormal");
  }
}

}  // namespace

double FourQubitState::norm() const {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  return std::sqrt(acc);
}

cplx inner_product(const FourQubitState& x, const FourQubitState& y) {
  cplx acc{};
  for (std::size_t k = 0; k < x.amps.size(); ++k) acc += std::conj(x.amps[k]) * y.amps[k];
  return acc;
}

DensityMatrix4 DensityMatrix4::maximally_mixed() {
  return {Eigen::Matrix4cd::Identity() * 0.25};
}

std::optional<std::string> density_matrix_defect(const DensityMatrix4& rho) {
  const Eigen::Matrix4cd& m = rho.entries;
  if (!m.allFinite()) return "density matrix has non-finite entries";
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    std::ostringstream msg;
    msg << "not Hermitian (max |rho - rho^dagger| = " << herm << ")";
    return msg.str();
  }
  const cplx tr = m.trace();
  if (std::abs(tr - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "trace is " << tr.real() << "+" << tr.imag() << "i, expected 1";
    return msg.str();
  }
  const Eigen::Matrix4cd h = 0.5 * (m + m.adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h, Eigen::EigenvaluesOnly);
  const double lowest = solver.eigenvalues().minCoeff();
  if (lowest < -1e-10) {
    std::ostringstream msg;
    msg << "not positive semidefinite (lowest eigenvalue " << lowest << ")";
    return msg.str();
  }
  return std::nullopt;
}

void validate(const DensityMatrix4& rho) {
  if (auto defect = density_matrix_defect(rho)) throw NumericalError(*defect);
}

Machine machine_for(SwapKind kind) noexcept {
  return kind == SwapKind::Phase ? Machine::PhaseSwap : Machine::AzimuthalSwap;
}

std::string_view to_string(Machine machine) noexcept {
  switch (machine) {
    case Machine::Identity:
      return "identity";
    case Machine::PhaseSwap:
      return "phase";
    case Machine::AzimuthalSwap:
      return "azimuthal";
    case Machine::AzimuthalSwapSharedPhase:
      return "azimuthal-shared-phase";
  }
  return "unknown";
}

StatePair apply_machine(Machine machine, const StatePair& pair) {
  switch (machine) {
    case Machine::Identity:
      return pair;
    case Machine::PhaseSwap:
      return partial_swap(SwapKind::Phase, pair);
    case Machine::AzimuthalSwap:
      return partial_swap(SwapKind::Azimuthal, pair);
    case Machine::AzimuthalSwapSharedPhase:
      return {{pair.second.theta(), pair.first.phi()}, {pair.first.theta(), pair.first.phi()}};
  }
  return pair;
}

TwoQubitState singlet_in_basis(const QubitBasis& basis) {
  require_orthonormal(basis);
  const TwoQubitState ud = tensor(basis.up(), basis.down());
  const TwoQubitState du = tensor(basis.down(), basis.up());
  TwoQubitState out;
  const double w = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < 4; ++k) out.amps[k] = w * (ud.amps[k] - du.amps[k]);
  return out;
}

FourQubitState twin_singlet(const QubitBasis& basis) {
  // With (A1, B1, A2, B2) ordering the twin singlet is a plain Kronecker
  // product of the two singlets.
  const TwoQubitState chi = singlet_in_basis(basis);
  FourQubitState out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.amps[4 * i + j] = chi.amps[i] * chi.amps[j];
  return out;
}

TermwiseResult apply_machine_termwise(Machine machine, const QubitBasis& basis) {
  require_orthonormal(basis);
  const BlochAngles& u = basis.up_angles();
  const BlochAngles& d = basis.down_angles();
  const Ket ku = ket(basis.up());
  const Ket kd = ket(basis.down());

  const StatePair mixed_ud = apply_machine(machine, {u, d});
  const StatePair mixed_du = apply_machine(machine, {d, u});

  // Alice pair (x, y) with Bob pair (v, w) contributes |x v y w>.
  FourQubitState raw;
  add_product(raw, +0.5, ku, kd, ku, kd);
  add_product(raw, +0.5, kd, ku, kd, ku);
  add_product(raw, -0.5, ket(mixed_ud.first), kd, ket(mixed_ud.second), ku);
  add_product(raw, -0.5, ket(mixed_du.first), ku, ket(mixed_du.second), kd);

  const double n = raw.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw NumericalError("term-wise state has zero norm");
  TermwiseResult result{.state = raw, .pre_normalization_norm = n, .degenerate = basis.degenerate()};
  for (auto& a : result.state.amps) a /= n;
  return result;
}

TermwiseResult apply_machine_termwise(SwapKind kind, const QubitBasis& basis) {
  return apply_machine_termwise(machine_for(kind), basis);
}

std::array<BobOutcome, 4> bob_outcomes(const FourQubitState& state, const QubitBasis& bob_basis) {
  require_orthonormal(bob_basis);
  const std::array<Ket, 2> bob = {ket(bob_basis.up()), ket(bob_basis.down())};
  std::array<BobOutcome, 4> out{};
  for (int o1 = 0; o1 < 2; ++o1) {
    for (int o2 = 0; o2 < 2; ++o2) {
      // Contract B1 and B2 against the outcome bras.
      std::array<cplx, 4> v{};
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int b1 = 0; b1 < 2; ++b1)
            for (int b2 = 0; b2 < 2; ++b2)
              v[2 * a1 + a2] += std::conj(bob[o1][b1]) * std::conj(bob[o2][b2]) *
                                state.amps[FourQubitState::index(a1, b1, a2, b2)];
      double p = 0.0;
      for (const auto& x : v) p += std::norm(x);
      if (p > 0.0) {
        const double s = std::sqrt(p);
        for (auto& x : v) x /= s;
      }
      out[2 * o1 + o2] = {o1, o2, p, v};
    }
  }
  return out;
}

DensityMatrix4 alice_mixture_after_bob_measurement(const FourQubitState& state,
                                                   const QubitBasis& bob_basis) {
  const double n = state.norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "four-qubit state has norm " << n << ", expected 1";
    throw NumericalError(msg.str());
  }
  DensityMatrix4 rho;
  for (const auto& o : bob_outcomes(state, bob_basis)) {
    if (o.probability == 0.0) continue;
    const Eigen::Map<const Eigen::Vector4cd> v(o.alice_state.data());
    rho.entries += o.probability * (v * v.adjoint());
  }
  return rho;
}

double trace_distance(const DensityMatrix4& a, const DensityMatrix4& b) {
  const Eigen::Matrix4cd diff = a.entries - b.entries;
  const Eigen::Matrix4cd h = 0.5 * (diff + diff.adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h, Eigen::EigenvaluesOnly);
  const double d = 0.5 * solver.eigenvalues().cwiseAbs().sum();
  if (!std::isfinite(d)) throw NumericalError("trace distance is not finite");
  return d;
}

SignallingReport run_signalling_experiment(Machine machine, const QubitBasis& basis1,
                                           const QubitBasis& basis2, double threshold,
                                           const ExperimentOptions& options) {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw InvalidArgument("signalling threshold must be positive and finite");
  }
  const QubitBasis& bob1 = options.bob_basis1 ? *options.bob_basis1 : basis1;
  const QubitBasis& bob2 = options.bob_basis2 ? *options.bob_basis2 : basis2;

  const TermwiseResult arm1 = apply_machine_termwise(machine, basis1);
  const TermwiseResult arm2 = apply_machine_termwise(machine, basis2);

  SignallingReport report{
      .machine = machine,
      .rho_b1 = alice_mixture_after_bob_measurement(arm1.state, bob1),
      .rho_b2 = alice_mixture_after_bob_measurement(arm2.state, bob2),
      .trace_distance = 0.0,
      .signalling = false,
      .pre_normalization_norm_b1 = arm1.pre_normalization_norm,
      .pre_normalization_norm_b2 = arm2.pre_normalization_norm,
      .degenerate_flags = {},
  };
  validate(report.rho_b1);
  validate(report.rho_b2);
  report.trace_distance = trace_distance(report.rho_b1, report.rho_b2);
  report.signalling = report.trace_distance > threshold;

  if (basis1.degenerate()) report.degenerate_flags.emplace_back("basis1");
  if (basis2.degenerate()) report.degenerate_flags.emplace_back("basis2");
  if (options.bob_basis1 && bob1.degenerate()) report.degenerate_flags.emplace_back("bob_basis1");
  if (options.bob_basis2 && bob2.degenerate()) report.degenerate_flags.emplace_back("bob_basis2");
  return report;
}

SignallingReport run_signalling_experiment(SwapKind kind, const QubitBasis& basis1,
                                           const QubitBasis& basis2, double threshold,
                                           const ExperimentOptions& options) {
  return run_signalling_experiment(machine_for(kind), basis1, basis2, threshold, options);
}

std::vector<SweepSample> run_signalling_sweep(const SweepOptions& options) {
  const std::size_t n = options.pair_count;
  std::vector<std::optional<SweepSample>> samples(n);

  const auto draw = [&](SampleRng& rng) {
    for (;;) {
      const BlochAngles a = sample_bloch_uniform(rng);
      if (std::abs(a.theta() - 0.5 * kPi) >= options.equatorial_exclusion) return a;
    }
  };
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      SampleRng rng(options.seed, k);
      const BlochAngles b1 = draw(rng);
      const BlochAngles b2 = draw(rng);
      const auto report = run_signalling_experiment(
          options.machine, QubitBasis::from_angles(b1), QubitBasis::from_angles(b2));
      samples[k] = SweepSample{b1, b2, report.trace_distance};
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, n)));
  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (n + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(n, t * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&, t, begin, end] {
          try {
            work(begin, end);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<SweepSample> out;
  out.reserve(n);
  for (auto& s : samples) out.push_back(*s);
  return out;
}

}  // namespace partswap
