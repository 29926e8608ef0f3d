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

#include "partswap/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "partswap/errors.hpp"
#include "partswap/feasibility.hpp"
#include "partswap/kernels/feasibility_kernel.hpp"
#include "partswap/report_format.hpp"
#include "partswap/signalling.hpp"

namespace partswap::cli {

namespace {

using report::Json;

/// Usage problem detected after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kDegree = kPi / 180.0;

struct CommonOptions {
  bool degrees = false;
  std::string out_path;
};

struct FeasibilityArgs {
  std::string kind = "phase";
  std::optional<double> theta1, phi1, theta2, phi2;
  std::optional<double> bar_theta1, bar_phi1, bar_theta2, bar_phi2;
  std::optional<std::string> bar_mode;
  double tol = kDefaultTolerance;
  std::string format = "json";
};

struct ScanArgs {
  std::string kind = "phase";
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  std::string bar_mode = "antipodal";
  double tol = kDefaultTolerance;
  std::string format = "csv";
  unsigned threads = 0;
};

struct SignalArgs {
  std::string kind;
  std::string basis1, basis2;
  std::optional<std::string> bob_basis1, bob_basis2;
  double threshold = kDefaultSignallingThreshold;
};

struct GramArgs {
  std::string input;
  double tol = kDefaultTolerance;
};

void emit(const CommonOptions& common, const std::string& text, std::ostream& out) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open output file '" + common.out_path + "'");
  file << text;
  file.flush();
  if (!file) throw OutputError("failed writing output file '" + common.out_path + "'");
}

double angle(double value, const CommonOptions& common) {
  return common.degrees ? value * kDegree : value;
}

double parse_number(std::string_view text) {
  // from_chars rejects leading '+' and whitespace, which is fine here.
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw UsageError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

QubitBasis parse_basis(const std::string& text, const CommonOptions& common) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError("basis must be given as theta,phi; got '" + text + "'");
  }
  const double theta = parse_number(std::string_view(text).substr(0, comma));
  const double phi = parse_number(std::string_view(text).substr(comma + 1));
  return QubitBasis::from_angles(BlochAngles(angle(theta, common), angle(phi, common)));
}

Machine parse_machine(const std::string& name) {
  if (name == "identity") return Machine::Identity;
  if (name == "azimuthal-shared-phase") return Machine::AzimuthalSwapSharedPhase;
  return machine_for(parse_swap_kind(name));
}

int cmd_feasibility(const FeasibilityArgs& a, const CommonOptions& common, std::ostream& out) {
  const SwapKind kind = parse_swap_kind(a.kind);
  const int bars_given = static_cast<int>(a.bar_theta1.has_value()) + a.bar_phi1.has_value() +
                         a.bar_theta2.has_value() + a.bar_phi2.has_value();
  BarMode mode = bars_given > 0 ? BarMode::Independent : BarMode::Antipodal;
  if (a.bar_mode) mode = parse_bar_mode(*a.bar_mode);
  if (mode == BarMode::Independent && bars_given != 4) {
    throw UsageError("independent bar mode needs --bar-theta1 --bar-phi1 --bar-theta2 --bar-phi2");
  }
  if (mode == BarMode::Antipodal && bars_given != 0) {
    throw UsageError("barred angles are derived in antipodal bar mode; drop them or use "
                     "--bar-mode independent");
  }

  const auto point = [&](double t, double p) { return BlochAngles(angle(t, common), angle(p, common)); };
  const BlochAngles a1 = point(*a.theta1, *a.phi1);
  const BlochAngles a2 = point(*a.theta2, *a.phi2);
  const FeasibilityInput input =
      mode == BarMode::Antipodal
          ? FeasibilityInput::antipodal(kind, a1, a2)
          : FeasibilityInput{kind, a1, a2, point(*a.bar_theta1, *a.bar_phi1),
                             point(*a.bar_theta2, *a.bar_phi2)};

  const FeasibilityReport r = check_feasibility(input, a.tol);
  if (a.format == "csv") {
    emit(common, report::csv_header() + "\n" + report::csv_row(r) + "\n", out);
  } else {
    Json doc = report::to_json(r, a.tol);
    doc["bar_mode"] = std::string(to_string(mode));
    emit(common, report::write_json(doc), out);
  }
  return kExitOk;
}

int cmd_scan(const ScanArgs& a, const CommonOptions& common, std::ostream& out,
             std::ostream& err) {
  ScanOptions options{
      .kind = parse_swap_kind(a.kind),
      .sample_count = a.samples,
      .seed = a.seed,
      .bar_mode = parse_bar_mode(a.bar_mode),
      .tol = a.tol,
      .threads = a.threads,
  };
  const auto reports = scan_feasible_set(options);

  std::string text;
  if (a.format == "csv") {
    text = report::csv_header() + "\n";
    for (const auto& r : reports) text += report::csv_row(r) + "\n";
  } else {
    Json rows = Json::array();
    for (const auto& r : reports) rows.push_back(report::to_json(r, a.tol));
    Json doc = {
        {"kind", a.kind},           {"bar_mode", a.bar_mode},
        {"seed", a.seed},           {"samples", a.samples},
        {"tolerance", a.tol},       {"feasible_fraction", feasible_fraction(reports)},
        {"reports", std::move(rows)},
    };
    text = report::write_json(doc);
  }
  emit(common, text, out);

  const auto feasible = std::count_if(reports.begin(), reports.end(),
                                      [](const auto& r) { return r.unitary_extendable; });
  err << "scan: kind=" << a.kind << " bar_mode=" << a.bar_mode << " samples=" << reports.size()
      << " feasible=" << feasible << " fraction=" << feasible_fraction(reports)
      << " kernel=" << kernels::to_string(kernels::best_isa()) << "\n";
  return kExitOk;
}

int cmd_signal(const SignalArgs& a, const CommonOptions& common, std::ostream& out) {
  const Machine machine = parse_machine(a.kind);
  const QubitBasis b1 = parse_basis(a.basis1, common);
  const QubitBasis b2 = parse_basis(a.basis2, common);
  ExperimentOptions options;
  if (a.bob_basis1) options.bob_basis1 = parse_basis(*a.bob_basis1, common);
  if (a.bob_basis2) options.bob_basis2 = parse_basis(*a.bob_basis2, common);

  const SignallingReport r = run_signalling_experiment(machine, b1, b2, a.threshold, options);
  if (!std::isfinite(r.trace_distance)) throw NumericalError("trace distance is not finite");

  const auto angles = [](const QubitBasis& b) {
    return Json::array({b.up_angles().theta(), b.up_angles().phi()});
  };
  Json doc = {
      {"kind", a.kind},
      {"basis1", angles(b1)},
      {"basis2", angles(b2)},
      {"bob_basis1", angles(options.bob_basis1.value_or(b1))},
      {"bob_basis2", angles(options.bob_basis2.value_or(b2))},
      {"threshold", a.threshold},
  };
  const Json body = report::to_json(r);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  emit(common, report::write_json(doc), out);
  return kExitOk;
}

std::vector<TwoQubitState> parse_state_list(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw UsageError(std::string("gram file needs an array field '") + key + "'");
  }
  std::vector<TwoQubitState> states;
  for (const auto& s : doc[key]) {
    if (!s.is_array() || s.size() != 4) {
      throw UsageError(std::string("each entry of '") + key + "' must hold 4 amplitudes");
    }
    TwoQubitState state;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& amp = s[k];
      if (!amp.is_array() || amp.size() != 2 || !amp[0].is_number() || !amp[1].is_number()) {
        throw UsageError("amplitudes must be [re, im] number pairs");
      }
      state.amps[k] = {amp[0].get<double>(), amp[1].get<double>()};
    }
    states.push_back(state);
  }
  return states;
}

int cmd_gram(const GramArgs& a, const CommonOptions& common, std::ostream& out) {
  std::ifstream file(a.input);
  if (!file) throw UsageError("cannot read '" + a.input + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in '" + a.input + "': " + e.what());
  }
  if (!doc.is_object()) throw UsageError("gram file must hold a JSON object");
  const auto inputs = parse_state_list(doc, "inputs");
  const auto outputs = parse_state_list(doc, "outputs");
  if (inputs.empty() || inputs.size() != outputs.size()) {
    throw UsageError("'inputs' and 'outputs' must be non-empty and of equal length");
  }
  const GramVerdict verdict = unitary_extension_check(inputs, outputs, a.tol);
  Json result = report::to_json(verdict);
  result["tolerance"] = a.tol;
  result["states"] = inputs.size();
  emit(common, report::write_json(result), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial-swap machine feasibility and signalling checks", "partswap"};
  app.require_subcommand(1);

  CommonOptions common;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--degrees", common.degrees, "Read angle arguments in degrees");
    sub->add_option("-o,--out", common.out_path, "Write the document to this file");
  };
  const auto positive = CLI::PositiveNumber;

  FeasibilityArgs fa;
  auto* feas = app.add_subcommand("feasibility", "Check one pair of state pairs for unitarity");
  feas->add_option("--kind", fa.kind, "Machine")->check(CLI::IsMember({"phase", "azimuthal"}));
  feas->add_option("--theta1", fa.theta1)->required();
  feas->add_option("--phi1", fa.phi1)->required();
  feas->add_option("--theta2", fa.theta2)->required();
  feas->add_option("--phi2", fa.phi2)->required();
  feas->add_option("--bar-theta1", fa.bar_theta1);
  feas->add_option("--bar-phi1", fa.bar_phi1);
  feas->add_option("--bar-theta2", fa.bar_theta2);
  feas->add_option("--bar-phi2", fa.bar_phi2);
  feas->add_option("--bar-mode", fa.bar_mode)->check(CLI::IsMember({"antipodal", "independent"}));
  feas->add_option("--tol", fa.tol, "Residual tolerance")->check(positive);
  feas->add_option("--format", fa.format)->check(CLI::IsMember({"json", "csv"}));
  add_common(feas);

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Sample the feasible set on the Bloch sphere");
  scan->add_option("--kind", sa.kind)->check(CLI::IsMember({"phase", "azimuthal"}));
  scan->add_option("--samples", sa.samples)->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  scan->add_option("--seed", sa.seed);
  scan->add_option("--bar-mode", sa.bar_mode)->check(CLI::IsMember({"antipodal", "independent"}));
  scan->add_option("--tol", sa.tol)->check(positive);
  scan->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--threads", sa.threads, "Worker threads (0 = all cores)");
  add_common(scan);

  SignalArgs ga;
  auto* signal = app.add_subcommand("signal", "Run the twin-singlet signalling experiment");
  signal->add_option("--kind", ga.kind)
      ->required()
      ->check(CLI::IsMember({"phase", "azimuthal", "identity", "azimuthal-shared-phase"}));
  signal->add_option("--basis1", ga.basis1, "theta,phi of the first basis")->required();
  signal->add_option("--basis2", ga.basis2, "theta,phi of the second basis")->required();
  signal->add_option("--bob-basis1", ga.bob_basis1, "Bob's basis in arm 1 (default: basis1)");
  signal->add_option("--bob-basis2", ga.bob_basis2, "Bob's basis in arm 2 (default: basis2)");
  signal->add_option("--threshold", ga.threshold)->check(positive);
  add_common(signal);

  GramArgs gr;
  auto* gram = app.add_subcommand("gram", "Gram-matrix unitary extension test");
  gram->add_option("--input", gr.input, "JSON file with inputs/outputs state lists")->required();
  gram->add_option("--tol", gr.tol)->check(positive);
  add_common(gram);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (*feas) return cmd_feasibility(fa, common, out);
    if (*scan) return cmd_scan(sa, common, out, err);
    if (*signal) return cmd_signal(ga, common, out);
    if (*gram) return cmd_gram(gr, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace partswap::cli
