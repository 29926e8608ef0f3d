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

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>
#include <vector>

#include "partswap/errors.hpp"
#include "partswap/feasibility.hpp"
#include "partswap/kernels/feasibility_kernel.hpp"
#include "partswap/sampling.hpp"

namespace partswap {

namespace {

FeasibilityInput draw_input(const ScanOptions& options, std::uint64_t index) {
  SampleRng rng(options.seed, index);
  const BlochAngles a1 = sample_bloch_uniform(rng);
  const BlochAngles a2 = sample_bloch_uniform(rng);
  if (options.bar_mode == BarMode::Antipodal) {
    return FeasibilityInput::antipodal(options.kind, a1, a2);
  }
  const BlochAngles b1 = sample_bloch_uniform(rng);
  const BlochAngles b2 = sample_bloch_uniform(rng);
  return {options.kind, a1, a2, b1, b2};
}

void fill_lane(const FeasibilityInput& in, kernels::FeasibilityLanes& lanes, std::size_t k) {
  const auto half = [](const BlochAngles& a) { return 0.5 * a.theta(); };
  lanes.c1[k] = std::cos(half(in.angles1));
  lanes.s1[k] = std::sin(half(in.angles1));
  lanes.c2[k] = std::cos(half(in.angles2));
  lanes.s2[k] = std::sin(half(in.angles2));
  lanes.cb1[k] = std::cos(half(in.bar1));
  lanes.sb1[k] = std::sin(half(in.bar1));
  lanes.cb2[k] = std::cos(half(in.bar2));
  lanes.sb2[k] = std::sin(half(in.bar2));
  const double dphi = in.angles2.phi() - in.angles1.phi();
  const double dphi_bar = in.bar2.phi() - in.bar1.phi();
  lanes.cos_dphi[k] = std::cos(dphi);
  lanes.sin_dphi[k] = std::sin(dphi);
  lanes.cos_dphi_bar[k] = std::cos(dphi_bar);
  lanes.sin_dphi_bar[k] = std::sin(dphi_bar);
}

FeasibilityReport assemble(const FeasibilityInput& in, const kernels::FeasibilityResults& r,
                           std::size_t k, double tol) {
  const double ctol = tol / kToleranceCoupling;
  const double dphi = in.angles2.phi() - in.angles1.phi();
  const double dphi_bar = in.bar2.phi() - in.bar1.phi();
  if (!std::isfinite(r.residual[k])) throw NumericalError("feasibility residual is not finite");
  return {
      .input = in,
      .lhs = {r.lhs_re[k], r.lhs_im[k]},
      .rhs = {r.rhs_re[k], r.rhs_im[k]},
      .residual = r.residual[k],
      .factored_residual = {r.factored_re[k], r.factored_im[k]},
      .condition_i = std::abs(r.cross[k]) <= ctol,
      .condition_ii = circular_distance(dphi, dphi_bar) <= ctol,
      .unitary_extendable = r.residual[k] < tol,
      .degenerate = in.degenerate(),
  };
}

}  // namespace

std::vector<FeasibilityReport> scan_feasible_set(const ScanOptions& options) {
  if (options.sample_count == 0) throw InvalidArgument("sample_count must be at least 1");
  if (!(options.tol > 0.0) || !std::isfinite(options.tol)) {
    throw InvalidArgument("tolerance must be positive and finite");
  }

  const std::size_t n = options.sample_count;
  std::vector<std::optional<FeasibilityInput>> inputs(n);
  kernels::FeasibilityLanes lanes;
  kernels::FeasibilityResults results;
  lanes.resize(n);
  results.resize(n);
  const kernels::Isa isa = kernels::best_isa();

  std::vector<std::optional<FeasibilityReport>> reports(n);
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      inputs[k] = draw_input(options, k);
      fill_lane(*inputs[k], lanes, k);
    }
    kernels::feasibility_batch(isa, lanes, results, begin, end);
    for (std::size_t k = begin; k < end; ++k) {
      reports[k] = assemble(*inputs[k], results, k, options.tol);
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);
  // Small scans are not worth a thread each.
  constexpr std::size_t kMinChunk = 4096;
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, n / kMinChunk)));

  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
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
    pool.clear();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<FeasibilityReport> out;
  out.reserve(n);
  for (auto& r : reports) out.push_back(*r);
  return out;
}

}  // namespace partswap
