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

#include "partswap/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace partswap {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t index) {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  return std::seed_seq{lo(seed), hi(seed), lo(index), hi(index)};
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index) {
  auto seq = make_seed_seq(seed, index);
  engine_.seed(seq);
}

double SampleRng::uniform() {
  // Built by hand rather than with std::uniform_real_distribution so the
  // stream is identical across standard library implementations.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

BlochAngles sample_bloch_uniform(SampleRng& rng) {
  const double z = 1.0 - 2.0 * rng.uniform();
  const double theta = std::acos(std::clamp(z, -1.0, 1.0));
  const double phi = kTwoPi * rng.uniform();
  return {theta, phi};
}

}  // namespace partswap
