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

#include <cassert>
#include <string>

#include "partswap/errors.hpp"
#include "partswap/kernels/feasibility_kernel.hpp"

namespace partswap::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept {
  static const Isa chosen = [] {
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
  }();
  return chosen;
}

void feasibility_batch(Isa isa, const FeasibilityLanes& in, FeasibilityResults& out,
                       std::size_t begin, std::size_t end) {
  if (!isa_available(isa)) {
    throw InvalidArgument("kernel variant '" + std::string(to_string(isa)) +
                          "' is not available on this machine");
  }
  assert(end <= in.size() && end <= out.size());
  switch (isa) {
    case Isa::Scalar:
      feasibility_scalar(in, out, begin, end);
      return;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      feasibility_avx2(in, out, begin, end);
#endif
      return;
    case Isa::Neon:
#if defined(__aarch64__)
      feasibility_neon(in, out, begin, end);
#endif
      return;
  }
}

void feasibility_batch(const FeasibilityLanes& in, FeasibilityResults& out, std::size_t begin,
                       std::size_t end) {
  feasibility_batch(best_isa(), in, out, begin, end);
}

}  // namespace partswap::kernels
