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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "frozen_values.hpp"
#include "oracle.hpp"
#include "partswap/cli.hpp"
#include "partswap/feasibility.hpp"
#include "partswap/report_format.hpp"
#include "partswap/signalling.hpp"

using namespace partswap;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

QubitBasis random_basis(oracle::Gen& gen) {
  const auto p = gen.bloch();
  return QubitBasis::from_angles({p.theta, p.phi});
}

FeasibilityInput random_independent(oracle::Gen& gen, SwapKind kind) {
  const auto p = [&] {
    const auto x = gen.bloch();
    return BlochAngles(x.theta, x.phi);
  };
  return {kind, p(), p(), p(), p()};
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome singlet_invariance() {
  oracle::Gen gen(1001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = twin_singlet(random_basis(gen));
    const auto b = twin_singlet(random_basis(gen));
    worst = std::max(worst, std::abs(std::abs(inner_product(a, b)) - 1.0));
  }
  return {worst < 1e-12, "max | |<chi chi|chi' chi'>| - 1 | = " + fmt("%.3e", worst)};
}

Outcome no_signalling_baseline() {
  oracle::Gen gen(1002);
  double worst_td = 0.0, worst_mixed = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto r = run_signalling_experiment(Machine::Identity, random_basis(gen), random_basis(gen));
    worst_td = std::max(worst_td, r.trace_distance);
    worst_mixed = std::max(worst_mixed, trace_distance(r.rho_b1, DensityMatrix4::maximally_mixed()));
  }
  return {worst_td < 1e-10 && worst_mixed < 1e-10,
          "max trace distance = " + fmt("%.3e", worst_td) + ", max distance to I/4 = " +
              fmt("%.3e", worst_mixed)};
}

Outcome condition_equivalence() {
  constexpr double tol = 1e-9;
  oracle::Gen gen(1003);
  int counterexamples = 0, kind_mismatch = 0, feasible = 0, total = 0;
  const auto check = [&](const FeasibilityInput& in) {
    ++total;
    const auto r = check_feasibility(in, tol);
    FeasibilityInput other = in;
    other.kind = in.kind == SwapKind::Phase ? SwapKind::Azimuthal : SwapKind::Phase;
    const auto r2 = check_feasibility(other, tol);
    feasible += r.unitary_extendable;
    counterexamples += (r.residual < tol) != (r.condition_i || r.condition_ii);
    counterexamples += (r2.residual < tol) != (r2.condition_i || r2.condition_ii);
    kind_mismatch += r.condition_i != r2.condition_i || r.condition_ii != r2.condition_ii;
  };
  for (int i = 0; i < 10000; ++i) check(random_independent(gen, i % 2 ? SwapKind::Phase : SwapKind::Azimuthal));
  // Inputs placed on each condition surface, so the biconditional is also
  // exercised on its true side.
  for (int i = 0; i < 1000; ++i) {
    auto in = random_independent(gen, SwapKind::Phase);
    in.bar2 = {in.bar2.theta(), in.bar1.phi() + in.angles2.phi() - in.angles1.phi()};
    check(in);
    auto in2 = random_independent(gen, SwapKind::Azimuthal);
    const double target = std::tan(in2.angles1.theta() / 2) * std::tan(in2.angles2.theta() / 2) /
                          std::tan(in2.bar1.theta() / 2);
    in2.bar2 = {2 * std::atan(target), in2.bar2.phi()};
    check(in2);
  }
  return {counterexamples == 0 && kind_mismatch == 0 && feasible == 2000,
          std::to_string(total) + " inputs, " + std::to_string(feasible) + " feasible, " +
              std::to_string(counterexamples) + " counterexamples, " +
              std::to_string(kind_mismatch) + " kind mismatches"};
}

Outcome factorization() {
  oracle::Gen gen(1004);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    for (auto kind : {SwapKind::Phase, SwapKind::Azimuthal}) {
      const auto r = check_feasibility(random_independent(gen, kind));
      worst = std::max(worst, std::abs((r.lhs - r.rhs) - r.factored_residual));
    }
  }
  return {worst < 1e-12, "max |direct - factored| = " + fmt("%.3e", worst)};
}

Outcome gram_consistency() {
  oracle::Gen gen(1005);
  int disagreements = 0, extendable = 0;
  for (int i = 0; i < 10000; ++i) {
    auto in = random_independent(gen, i % 2 ? SwapKind::Phase : SwapKind::Azimuthal);
    if (i % 4 == 0) in.bar2 = {in.bar2.theta(), in.bar1.phi() + in.angles2.phi() - in.angles1.phi()};
    const auto r = check_feasibility(in);
    const std::vector<TwoQubitState> inputs{product_state(in.pair1()), product_state(in.pair2())};
    const std::vector<TwoQubitState> outputs{swap_product_state(in.kind, in.pair1()),
                                             swap_product_state(in.kind, in.pair2())};
    const bool gram = unitary_extension_exists(inputs, outputs);
    disagreements += gram != r.unitary_extendable;
    extendable += gram;
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements over 10000 sets (" +
                                  std::to_string(extendable) + " extendable)"};
}

Outcome signalling_witness() {
  const auto b1 = QubitBasis::from_angles({kPi / 3, 0.2});
  const auto b2 = QubitBasis::from_angles({kPi / 5, 1.1});
  const double td = run_signalling_experiment(SwapKind::Phase, b1, b2).trace_distance;
  const double oracle_td = oracle::experiment_trace_distance(
      oracle::Rewrite::Phase, {kPi / 3, 0.2}, {kPi / 5, 1.1});
  double worst_equatorial = 0.0;
  for (double p1 : {0.0, 0.5, 2.0})
    for (double p2 : {kPi / 2, 1.3, 5.5}) {
      const auto r = run_signalling_experiment(SwapKind::Phase, QubitBasis::from_angles({kPi / 2, p1}),
                                               QubitBasis::from_angles({kPi / 2, p2}));
      worst_equatorial = std::max(worst_equatorial, r.trace_distance);
    }
  const bool pass = td > 1e-6 && std::abs(td - frozen::kPhaseWitness) < 1e-10 &&
                    std::abs(td - oracle_td) < 1e-10 && worst_equatorial < 1e-10;
  return {pass, "trace distance = " + fmt("%.17g", td) + " (frozen " +
                    fmt("%.17g", frozen::kPhaseWitness) + "), equatorial max = " +
                    fmt("%.3e", worst_equatorial)};
}

Outcome positivity_sweep() {
  std::ostringstream detail;
  bool pass = true;
  for (auto [machine, frozen_fraction] :
       {std::pair{Machine::PhaseSwap, frozen::kSweepFractionPhase},
        std::pair{Machine::AzimuthalSwap, frozen::kSweepFractionAzimuthal}}) {
    const auto samples = run_signalling_sweep({.machine = machine, .pair_count = 1000, .seed = 2024});
    int hits = 0;
    double min_td = 1.0;
    for (const auto& s : samples) {
      hits += s.trace_distance > 1e-6;
      min_td = std::min(min_td, s.trace_distance);
    }
    const double fraction = hits / 1000.0;
    pass = pass && fraction >= 0.95;
    detail << to_string(machine) << ": fraction " << fraction << " (oracle run " << frozen_fraction
           << "), min " << fmt("%.3e", min_td) << "; ";
  }
  return {pass, detail.str()};
}

Outcome partial_trace_oracle() {
  oracle::Gen gen(1008);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto v = gen.random_state(16);
    FourQubitState s;
    for (int k = 0; k < 16; ++k) s.amps[k] = v(k);
    const auto bob = gen.bloch();
    const auto rho = alice_mixture_after_bob_measurement(s, QubitBasis::from_angles({bob.theta, bob.phi}));
    worst = std::max(worst, (rho.entries - oracle::dephased_partial_trace(v, bob)).cwiseAbs().maxCoeff());
  }
  return {worst < 1e-12, "max entrywise deviation = " + fmt("%.3e", worst)};
}

Outcome cli_contract() {
  const auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::pair{code, out.str()};
  };
  int failures = 0;
  std::ostringstream detail;

  const std::vector<std::string> scan = {"scan", "--samples", "500", "--seed", "17", "--bar-mode",
                                         "independent"};
  const auto a = run(scan), b = run(scan);
  if (a.first != 0 || a.second != b.second) {
    ++failures;
    detail << "scan not deterministic; ";
  }

  const std::vector<std::vector<std::string>> json_commands = {
      {"feasibility", "--theta1", "0.4", "--phi1", "1", "--theta2", "2.2", "--phi2", "5"},
      {"scan", "--samples", "20", "--format", "json"},
      {"signal", "--kind", "azimuthal", "--basis1", "1.0471975511965976,0.2", "--basis2",
       "0.62831853071795862,1.1"},
  };
  for (const auto& c : json_commands) {
    const auto r = run(c);
    if (r.first != 0 || report::write_json(report::Json::parse(r.second)) != r.second) {
      ++failures;
      detail << c[0] << " JSON does not round-trip; ";
    }
  }

  const std::vector<std::pair<std::vector<std::string>, int>> matrix = {
      {{}, 1},
      {{"feasibility", "--theta1", "1", "--phi1", "0", "--phi2", "0"}, 1},
      {{"feasibility", "--theta1", "9", "--phi1", "0", "--theta2", "1", "--phi2", "0"}, 1},
      {{"feasibility", "--theta1", "1", "--phi1", "0", "--theta2", "1", "--phi2", "0", "--tol", "0"}, 1},
      {{"scan", "--samples", "0"}, 1},
      {{"scan", "--samples", "1", "--out", "/nonexistent-dir/out.csv"}, 2},
      {{"signal", "--kind", "phase", "--basis1", "1;2", "--basis2", "1,2"}, 1},
      {{"signal", "--kind", "phase", "--basis1", "1,2"}, 1},
      {{"gram", "--input", "/nonexistent/file.json"}, 1},
      {{"signal", "--kind", "phase", "--basis1", "1,2", "--basis2", "1,2"}, 0},
  };
  for (const auto& [args, expected] : matrix) {
    const int code = run(args).first;
    if (code != expected) {
      ++failures;
      detail << "exit " << code << " != " << expected << " for '"
             << (args.empty() ? std::string("<none>") : args[0]) << "'; ";
    }
  }
  detail << failures << " contract violations";
  return {failures == 0, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "singlet basis invariance", 1.0, singlet_invariance},
      {2, "no-signalling baseline", 2.0, no_signalling_baseline},
      {3, "condition equivalence", 2.0, condition_equivalence},
      {4, "factorization identity", 1.0, factorization},
      {5, "Gram-criterion consistency", 3.0, gram_consistency},
      {6, "signalling witness", 1.0, signalling_witness},
      {7, "generic positivity sweep", 10.0, positivity_sweep},
      {8, "partial-trace oracle equivalence", 2.0, partial_trace_oracle},
      {9, "CLI determinism and schema", 2.0, cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool within_budget = secs < c.budget_seconds;
    const bool pass = o.pass && within_budget;
    failed += !pass;
    std::printf("[%s] %d. %s (%.3f s, budget %.0f s): %s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.budget_seconds, o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
