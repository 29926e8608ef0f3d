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

#include <string>
#include <vector>

#include "json.hpp"
#include "partswap/feasibility.hpp"
#include "partswap/signalling.hpp"

namespace partswap::report {

using Json = nlohmann::ordered_json;

/// %.17g, so every double survives a text round trip exactly.
[[nodiscard]] std::string format_double(double x);

/// Serializes with two-space indentation and 17 significant digits.
/// Floating values always carry a '.' or exponent so they parse back as
/// floating values. Non-finite values become null.
[[nodiscard]] std::string write_json(const Json& doc);

[[nodiscard]] Json to_json(const FeasibilityReport& report, double tol);
[[nodiscard]] Json to_json(const SignallingReport& report);
[[nodiscard]] Json to_json(const GramVerdict& verdict);
[[nodiscard]] Json to_json(const DensityMatrix4& rho);

/// Column header of the scan CSV (no trailing newline).
[[nodiscard]] const std::string& csv_header();
[[nodiscard]] std::string csv_row(const FeasibilityReport& report);

}  // namespace partswap::report
