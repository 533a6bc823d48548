// Copyright 2026 The absfef Authors
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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "CLI11.hpp"
#include "absfef/absolute.hpp"
#include "absfef/bloch.hpp"
#include "absfef/errors.hpp"
#include "absfef/states.hpp"
#include "absfef/witness.hpp"
#include "format.hpp"
#include "reproduce.hpp"

namespace absfef::cli {

namespace {

constexpr double kGridQuantum = 1e12;

Json vector_json(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i) + 0.0);
  return out;
}

Json decomposition_json(const ComplexMatrix& h, int d) {
  if (d != 2 && d != 3) return nullptr;
  const BasisKind kind = d == 2 ? BasisKind::pauli : BasisKind::gellmann;
  Json terms = Json::array();
  for (const auto& [label, coefficient] : decompose(h, kind).terms()) {
    terms.push_back({{"term", label}, {"coefficient", coefficient}});
  }
  return {{"basis", std::string(to_string(kind))}, {"terms", std::move(terms)}};
}

void write_json(const Json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ' ';
    out += format_double(values[k]);
  }
  return out;
}

// Flags shared by every command that takes a state.
struct StateFlags {
  std::string family;
  std::string input;
  std::map<std::string, std::string> scalars;
  std::string weights;

  void attach(CLI::App* app, const std::string& family_flag) {
    app->add_option(family_flag, family, "State family");
    app->add_option("--input", input, "State file");
    for (const char* name : {"d", "q", "beta", "p", "alpha"}) {
      app->add_option(std::string("--") + name, scalars[name], std::string("Family parameter ") + name);
    }
    app->add_option("--weights", weights, "Four weights a,b,c,d for diagonal families");
  }

  FamilyInput family_input() const {
    FamilyInput in{family, {}, std::nullopt};
    for (const auto& [name, text] : scalars) {
      if (!text.empty()) in.scalars[name] = parse_rational(text);
    }
    if (!weights.empty()) in.weights = parse_weights(weights);
    return in;
  }

  std::optional<StateSource> source() const {
    if (!family.empty() && !input.empty()) {
      throw CliError(ExitCode::parse, "give either a family or --input, not both");
    }
    if (!input.empty()) return StateSource{std::nullopt, input};
    if (!family.empty()) return StateSource{family_input(), std::nullopt};
    return std::nullopt;
  }
};

}  // namespace

DensityMatrix load(const StateSource& source) {
  if (source.path) return read_state_file(*source.path);
  return build_family(*source.family);
}

Json describe(const StateSource& source) {
  if (source.path) return {{"input", *source.path}};
  return describe(*source.family);
}

void cmd_analyze(const StateSource& source, const GlobalOptions& options, std::ostream& out) {
  const DensityMatrix rho = load(source);
  const int d = rho.local_dim();
  const Spectrum spectrum = eig_hermitian(rho.matrix());
  const ClassificationReport report = classify(rho, options.fef());

  Json fef_doc{{"value", report.fef_value},
               {"canonical_overlap", fef_lower_bound(rho)},
               {"restarts", report.fef.restarts_used},
               {"seed", options.seed},
               {"tol", options.tol},
               {"converged", report.fef.converged}};
  if (d == 2) fef_doc["closed_form"] = fef_two_qubit_closed_form(rho);

  Json doc{{"source", describe(source)},
           {"dims", {rho.dim_a(), rho.dim_b()}},
           {"spectrum", vector_json(spectrum.eigenvalues)},
           {"purity", purity(rho)},
           {"lambda_max", report.lambda_max},
           {"threshold", report.threshold},
           {"absolute_fef", report.label == Label::absolute},
           {"label", std::string(to_string(report.label))},
           {"boundary", report.boundary},
           {"fef", std::move(fef_doc)},
           {"teleportation_useful", report.teleportation_useful},
           {"k_copy_nonlocal", std::string(report.k_copy_presentation())}};
  if (d == 2) {
    const BlochParams bloch = bloch_extract(rho);
    doc["bloch"] = {{"a", vector_json(bloch.a)},
                    {"b", vector_json(bloch.b)},
                    {"t", matrix_to_json(RealMatrix(bloch.t))}};
    std::vector<double> lambda(spectrum.eigenvalues.data(),
                               spectrum.eigenvalues.data() + spectrum.eigenvalues.size());
    for (double& v : lambda) v = std::max(v, 0.0);
    doc["absolutely_separable"] = is_absolutely_separable_2q(lambda);
  }
  write_json(doc, out);
}

void cmd_witness(const std::optional<std::string>& unitary, const std::optional<StateSource>& state,
                 std::ostream& out) {
  if (!unitary && !state) throw CliError(ExitCode::parse, "witness needs --unitary or a state");
  std::optional<DensityMatrix> rho;
  if (state) rho = load(*state);

  UnitaryInput u;
  if (unitary) {
    u = read_unitary(*unitary);
  } else {
    const AbsoluteVerdict verdict = is_absolute_fef(*rho);
    if (verdict.absolute) {
      throw CliError(ExitCode::no_witness,
                     "no detecting witness exists: lambda_max " + format_double(verdict.lambda_max) +
                         " <= 1/d = " + format_double(verdict.threshold));
    }
    u = {activating_unitary(*rho), "activating"};
  }
  const auto n = u.matrix.rows();
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (u.matrix.cols() != n || d * d != n || d < 2) {
    throw CliError(ExitCode::parse, "unitary must be square of size d^2 with d >= 2");
  }
  const WitnessOperator s = pullback(teleportation_witness(d), u.matrix);

  Json doc{{"d", d},
           {"unitary", {{"source", u.source}, {"matrix", matrix_to_json(u.matrix)}}},
           {"witness", matrix_to_json(s.matrix)}};
  if (rho) {
    const double value = evaluate(s, *rho);
    doc["state"] = describe(*state);
    doc["expectation"] = value;
    doc["detected"] = value < -kDecisionTol;
  }
  doc["decomposition"] = decomposition_json(s.matrix, d);
  write_json(doc, out);
}

ScanRange parse_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw CliError(ExitCode::parse, "--range expects start:stop:step, got '" + text + "'");
  }
  ScanRange r{parse_rational(text.substr(0, first)),
              parse_rational(text.substr(first + 1, second - first - 1)),
              parse_rational(text.substr(second + 1))};
  if (!(r.step > 0.0) || r.stop < r.start) {
    throw CliError(ExitCode::parse, "--range needs step > 0 and stop >= start");
  }
  return r;
}

std::vector<double> grid(const ScanRange& range) {
  const auto count = static_cast<long>(std::floor((range.stop - range.start) / range.step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) {
    out.push_back(std::round((range.start + k * range.step) * kGridQuantum) / kGridQuantum);
  }
  return out;
}

void cmd_scan(const FamilyInput& family, const std::string& param, const ScanRange& range,
              const GlobalOptions& options, std::ostream& out) {
  const auto& allowed = family_parameters(family.name);
  if (std::find(allowed.begin(), allowed.end(), param) == allowed.end()) {
    throw CliError(ExitCode::parse, "family " + family.name + " has no parameter '" + param + "'");
  }
  out << kScanHeader << '\n';
  for (double value : grid(range)) {
    FamilyInput point = family;
    point.scalars[param] = value;
    const DensityMatrix rho = build_family(point);
    const ClassificationReport report = classify(rho, options.fef());
    out << format_double(value) << ',' << format_double(report.lambda_max) << ','
        << format_double(fef_lower_bound(rho)) << ',' << format_double(report.fef_value) << ','
        << to_string(report.label) << ',' << (report.boundary ? "true" : "false") << '\n';
  }
}

void cmd_bounds(int d, int samples, const GlobalOptions& options, std::ostream& out) {
  const PurityBounds b = purity_bounds(d, samples, options.seed);
  if (options.json) {
    Json numeric_min = Json::array();
    for (const auto& m : b.min_purity_numeric) {
      numeric_min.push_back({{"epsilon", m.epsilon}, {"value", m.value}});
    }
    write_json({{"d", d},
                {"max_purity_absolute", b.max_purity_absolute},
                {"max_attained", true},
                {"max_spectrum", b.max_spectrum},
                {"max_purity_numeric", b.max_purity_numeric},
                {"min_purity_nonabsolute", b.min_purity_nonabsolute},
                {"min_attained", b.min_attained},
                {"min_spectrum", b.min_spectrum},
                {"min_purity_numeric", std::move(numeric_min)}},
               out);
    return;
  }
  out << "purity bounds, d = " << d << '\n';
  out << "  max purity, absolute set        " << format_double(b.max_purity_absolute)
      << " (attained)\n";
  out << "    extremal spectrum             " << join(b.max_spectrum) << '\n';
  out << "    numeric search                " << format_double(b.max_purity_numeric) << '\n';
  out << "  min purity, outside             " << format_double(b.min_purity_nonabsolute)
      << (b.min_attained ? " (attained)\n" : " (infimum, not attained)\n");
  out << "    limiting spectrum             " << join(b.min_spectrum) << '\n';
  for (const auto& m : b.min_purity_numeric) {
    out << "    numeric, lambda_1 = 1/d + " << format_double(m.epsilon) << "  "
        << format_double(m.value) << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Absolute fully entangled fraction toolkit", "absfef"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  int restarts = 0;
  auto* restarts_opt = app.add_option("--restarts", restarts, "Optimizer restarts");
  app.add_option("--seed", global.seed, "Seed for every stochastic routine");
  app.add_option("--tol", global.tol, "Optimizer tolerance");
  app.add_flag("--json", global.json, "Machine-readable output");

  auto* analyze = app.add_subcommand("analyze", "Classify a state");
  StateFlags analyze_state;
  analyze_state.attach(analyze, "--family");

  auto* witness = app.add_subcommand("witness", "Witness S = U^dagger W U and its decomposition");
  StateFlags witness_state;
  witness_state.attach(witness, "--state");
  std::string unitary;
  witness->add_option("--unitary", unitary, "Unitary file or U1, U2, U3");

  auto* scan = app.add_subcommand("scan", "Sweep one family parameter to CSV");
  StateFlags scan_state;
  scan_state.attach(scan, "--family");
  std::string param, range, out_path;
  scan->add_option("--param", param, "Parameter to sweep")->required();
  scan->add_option("--range", range, "start:stop:step")->required();
  scan->add_option("--out", out_path, "CSV path (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "Purity thresholds of the absolute set");
  int bounds_d = 2;
  int samples = 64;
  bounds->add_option("--d", bounds_d, "Local dimension");
  bounds->add_option("--samples", samples, "Random starts for the numeric search");

  auto* reproduce = app.add_subcommand("reproduce", "Check every reference value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::parse);
  }
  if (restarts_opt->count()) global.restarts = restarts;

  try {
    if (analyze->parsed()) {
      const auto source = analyze_state.source();
      if (!source) throw CliError(ExitCode::parse, "analyze needs --family or --input");
      cmd_analyze(*source, global, out);
    } else if (witness->parsed()) {
      cmd_witness(unitary.empty() ? std::nullopt : std::optional<std::string>(unitary),
                  witness_state.source(), out);
    } else if (scan->parsed()) {
      if (scan_state.family.empty()) throw CliError(ExitCode::parse, "scan needs --family");
      const FamilyInput family = scan_state.family_input();
      const ScanRange parsed_range = parse_range(range);
      if (out_path.empty()) {
        cmd_scan(family, param, parsed_range, global, out);
      } else {
        std::ofstream file(out_path);
        if (!file) throw CliError(ExitCode::io, "cannot write '" + out_path + "'");
        cmd_scan(family, param, parsed_range, global, file);
        file.flush();
        if (!file) throw CliError(ExitCode::io, "write to '" + out_path + "' failed");
      }
    } else if (bounds->parsed()) {
      cmd_bounds(bounds_d, samples, global, out);
    } else if (reproduce->parsed()) {
      return static_cast<int>(cmd_reproduce(global, out));
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const ValidationError& e) {
    err << "error: invalid input (" << e.invariant() << ", magnitude "
        << format_double(e.magnitude()) << "): " << e.what() << '\n';
    return static_cast<int>(ExitCode::parse);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::domain);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::parse);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::parse);
  }
  return static_cast<int>(ExitCode::ok);
}

}  // namespace absfef::cli
