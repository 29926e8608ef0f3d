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

#include "partswap/swap_maps.hpp"

#include <string>

#include "partswap/errors.hpp"

namespace partswap {

std::string_view to_string(SwapKind kind) noexcept {
  switch (kind) {
    case SwapKind::Phase:
      return "phase";
    case SwapKind::Azimuthal:
      return "azimuthal";
  }
  return "unknown";
}

SwapKind parse_swap_kind(std::string_view name) {
  if (name == "phase") return SwapKind::Phase;
  if (name == "azimuthal") return SwapKind::Azimuthal;
  throw InvalidArgument("unknown swap kind '" + std::string(name) +
                        "' (expected phase or azimuthal)");
}

StatePair partial_swap(SwapKind kind, const StatePair& pair) {
  const auto& [a, b] = pair;
  switch (kind) {
    case SwapKind::Phase:
      return {{a.theta(), b.phi()}, {b.theta(), a.phi()}};
    case SwapKind::Azimuthal:
      return {{b.theta(), a.phi()}, {a.theta(), b.phi()}};
  }
  return pair;
}

TwoQubitState product_state(const StatePair& pair) {
  return tensor(state_from_angles(pair.first), state_from_angles(pair.second));
}

TwoQubitState swap_product_state(SwapKind kind, const StatePair& pair) {
  return product_state(partial_swap(kind, pair));
}

}  // namespace partswap
