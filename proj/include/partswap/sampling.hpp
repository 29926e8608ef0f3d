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

#pragma once

#include <cstdint>
#include <random>

#include "partswap/bloch.hpp"

namespace partswap {

/// Random stream owned by one sample. Seeded from (seed, index) so that a
/// batch can be evaluated in any order or on any number of threads.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);

  /// Uniform in [0, 1) with 53 random bits.
  [[nodiscard]] double uniform();

 private:
  std::mt19937_64 engine_;
};

/// Uniform over the sphere surface: cos(theta) uniform in [-1, 1],
/// phi uniform in [0, 2pi).
[[nodiscard]] BlochAngles sample_bloch_uniform(SampleRng& rng);

}  // namespace partswap
