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
 * The two hypothetical partial-swap machines. They act on Bloch
 * coordinates of a state pair, not as linear operators on C^2 x C^2:
 *
 *   PhaseSwap:     (t1, p1), (t2, p2)  ->  (t1, p2), (t2, p1)
 *   AzimuthalSwap: (t1, p1), (t2, p2)  ->  (t2, p1), (t1, p2)
 */
#pragma once

#include <string_view>

#include "partswap/bloch.hpp"

namespace partswap {

enum class SwapKind { Phase, Azimuthal };

[[nodiscard]] std::string_view to_string(SwapKind kind) noexcept;
/// Accepts "phase" or "azimuthal"; throws InvalidArgument otherwise.
[[nodiscard]] SwapKind parse_swap_kind(std::string_view name);

/// Ordered pair |A(first)>|A(second)>.
struct StatePair {
  BlochAngles first;
  BlochAngles second;

  [[nodiscard]] bool degenerate() const noexcept {
    return first.degenerate() || second.degenerate();
  }
  friend bool operator==(const StatePair&, const StatePair&) = default;
};

/// Exchanges one coordinate between the two members of the pair. An
/// involution for either kind.
[[nodiscard]] StatePair partial_swap(SwapKind kind, const StatePair& pair);

/// tensor(A(q.first), A(q.second)) with q = partial_swap(kind, pair).
[[nodiscard]] TwoQubitState swap_product_state(SwapKind kind, const StatePair& pair);

/// Product ket of the pair without any machine applied.
[[nodiscard]] TwoQubitState product_state(const StatePair& pair);

}  // namespace partswap
