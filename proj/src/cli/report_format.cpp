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

#include "partswap/report_format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace partswap::report {

namespace {

void write_string(std::string& out, const std::string& s) {
  // Delegate escaping to nlohmann.
  out += Json(s).dump();
}

void write_value(std::string& out, const Json& v, int depth) {
  const auto indent = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        indent(depth + 1);
        write_string(out, key);
        out += ": ";
        write_value(out, item, depth + 1);
      }
      out += "\n";
      indent(depth);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; nested containers break.
      const bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) indent(depth + 1);
        write_value(out, item, depth + 1);
      }
      if (!flat) {
        out += "\n";
        indent(depth);
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      std::string s = format_double(x);
      if (s.find_first_of(".e") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    case Json::value_t::string:
      write_string(out, v.get<std::string>());
      return;
    default:
      out += v.dump();
      return;
  }
}

Json complex_pair(cplx z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string write_json(const Json& doc) {
  std::string out;
  write_value(out, doc, 0);
  out += "\n";
  return out;
}

Json to_json(const FeasibilityReport& r, double tol) {
  const auto& in = r.input;
  Json input = {
      {"theta1", in.angles1.theta()},   {"phi1", in.angles1.phi()},
      {"theta2", in.angles2.theta()},   {"phi2", in.angles2.phi()},
      {"bar_theta1", in.bar1.theta()},  {"bar_phi1", in.bar1.phi()},
      {"bar_theta2", in.bar2.theta()},  {"bar_phi2", in.bar2.phi()},
  };
  return {
      {"kind", std::string(to_string(in.kind))},
      {"tolerance", tol},
      {"input", input},
      {"lhs", complex_pair(r.lhs)},
      {"rhs", complex_pair(r.rhs)},
      {"residual", r.residual},
      {"factored_residual", complex_pair(r.factored_residual)},
      {"condition_i", r.condition_i},
      {"condition_ii", r.condition_ii},
      {"unitary_extendable", r.unitary_extendable},
      {"degenerate", r.degenerate},
  };
}

Json to_json(const DensityMatrix4& rho) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(complex_pair(rho.entries(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SignallingReport& r) {
  Json flags = Json::array();
  for (const auto& f : r.degenerate_flags) flags.push_back(f);
  return {
      {"machine", std::string(to_string(r.machine))},
      {"rho_b1", to_json(r.rho_b1)},
      {"rho_b2", to_json(r.rho_b2)},
      {"trace_distance", r.trace_distance},
      {"signalling", r.signalling},
      {"degenerate_flags", flags},
      {"pre_normalization_norms", Json::array({r.pre_normalization_norm_b1,
                                               r.pre_normalization_norm_b2})},
  };
}

Json to_json(const GramVerdict& v) {
  Json worst = nullptr;
  if (v.worst_entry) worst = Json::array({v.worst_entry->first, v.worst_entry->second});
  return {
      {"extendable", v.extendable},
      {"max_deviation", v.max_deviation},
      {"worst_entry", worst},
  };
}

const std::string& csv_header() {
  static const std::string header =
      "theta1,phi1,theta2,phi2,bar_theta1,bar_phi1,bar_theta2,bar_phi2,kind,residual,"
      "condition_i,condition_ii,feasible";
  return header;
}

std::string csv_row(const FeasibilityReport& r) {
  const auto& in = r.input;
  const auto b = [](bool x) { return x ? "true" : "false"; };
  std::ostringstream row;
  row << format_double(in.angles1.theta()) << ',' << format_double(in.angles1.phi()) << ','
      << format_double(in.angles2.theta()) << ',' << format_double(in.angles2.phi()) << ','
      << format_double(in.bar1.theta()) << ',' << format_double(in.bar1.phi()) << ','
      << format_double(in.bar2.theta()) << ',' << format_double(in.bar2.phi()) << ','
      << to_string(in.kind) << ',' << format_double(r.residual) << ',' << b(r.condition_i) << ','
      << b(r.condition_ii) << ',' << b(r.unitary_extendable);
  return row.str();
}

}  // namespace partswap::report
