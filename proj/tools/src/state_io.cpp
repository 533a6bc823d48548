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

#include "state_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "absfef/errors.hpp"
#include "absfef/states.hpp"
#include "absfef/tripartite.hpp"

namespace absfef::cli {

namespace {

using nlohmann::json;

struct FamilyRule {
  std::vector<std::string> required;
  std::vector<std::string> optional;
  bool weights = false;
};

const std::map<std::string, FamilyRule>& rules() {
  static const std::map<std::string, FamilyRule> kRules{
      {"x1", {}},
      {"x2", {{"q"}, {}}},
      {"y3", {{"q"}, {}}},
      {"isotropic", {{"beta"}, {"d"}}},
      {"iso2", {{"beta"}, {}}},
      {"iso3", {{"beta"}, {}}},
      {"comp_diag", {{}, {}, true}},
      {"bell_diag", {{}, {}, true}},
      {"ghz", {}},
      {"w", {}},
      {"af_not_as_example", {}},
      {"max_entangled", {{}, {"d"}}},
      {"ghzw", {{"p"}, {}}},
      {"three_qutrit", {{"alpha", "beta"}, {}}},
  };
  return kRules;
}

const FamilyRule& rule_for(const std::string& name) {
  auto it = rules().find(name);
  if (it == rules().end()) throw CliError(ExitCode::parse, "unknown family '" + name + "'");
  return it->second;
}

ComplexMatrix parse_matrix(const json& rows, const std::string& what) {
  if (!rows.is_array() || rows.empty()) {
    throw CliError(ExitCode::parse, what + ": \"matrix\" must be a nonempty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw CliError(ExitCode::parse, what + ": row " + std::to_string(i) + " must have " +
                                          std::to_string(n) + " entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& z = row[static_cast<std::size_t>(j)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw CliError(ExitCode::parse, what + ": entry (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") must be [re, im]");
      }
      m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(ExitCode::io, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw CliError(ExitCode::parse, path + ": " + e.what());
  }
}

}  // namespace

const std::vector<std::string>& family_parameters(const std::string& name) {
  static std::map<std::string, std::vector<std::string>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const FamilyRule& rule = rule_for(name);
  std::vector<std::string> all = rule.required;
  all.insert(all.end(), rule.optional.begin(), rule.optional.end());
  return cache.emplace(name, std::move(all)).first->second;
}

DensityMatrix build_family(const FamilyInput& input) {
  const FamilyRule& rule = rule_for(input.name);
  const auto& allowed = family_parameters(input.name);
  for (const auto& [key, value] : input.scalars) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw CliError(ExitCode::parse, "--" + key + " does not apply to family " + input.name);
    }
  }
  for (const std::string& key : rule.required) {
    if (!input.scalars.count(key)) {
      throw CliError(ExitCode::parse, "family " + input.name + " needs --" + key);
    }
  }
  if (rule.weights != input.weights.has_value()) {
    throw CliError(ExitCode::parse, rule.weights ? "family " + input.name + " needs --weights"
                                                 : "--weights does not apply to " + input.name);
  }
  const auto& s = input.scalars;
  if (input.name == "ghzw") {
    return ghzw_marginal(s.at("p")).marginal;
  }
  if (input.name == "three_qutrit") {
    return three_qutrit_marginal(s.at("alpha"), s.at("beta")).marginal;
  }
  if (input.name == "iso2" || input.name == "iso3") {
    return construct({Family::isotropic,
                      {{"d", input.name == "iso2" ? 2.0 : 3.0}, {"beta", s.at("beta")}}});
  }
  FamilySpec spec{family_from_string(input.name), {s.begin(), s.end()}};
  if (input.weights) {
    const auto& w = *input.weights;
    spec.params = {{"a", w[0]}, {"b", w[1]}, {"c", w[2]}, {"d", w[3]}};
  }
  return construct(spec);
}

Json describe(const FamilyInput& input) {
  Json params = Json::object();
  for (const auto& [key, value] : input.scalars) params[key] = value;
  if (input.weights) params["weights"] = *input.weights;
  return {{"family", input.name}, {"params", params}};
}

DensityMatrix read_state_file(const std::string& path) {
  const json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
    throw CliError(ExitCode::parse, path + ": expected an object with \"dims\" and \"matrix\"");
  }
  const json& dims = doc["dims"];
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
      !dims[1].is_number_integer() || dims[0].get<int>() < 1 || dims[1].get<int>() < 1) {
    throw CliError(ExitCode::parse, path + ": \"dims\" must be two positive integers");
  }
  const ComplexMatrix m = parse_matrix(doc["matrix"], path);
  return validate_density(m, dims[0].get<int>(), dims[1].get<int>());
}

UnitaryInput read_unitary(const std::string& spec) {
  if (spec == "U1" || spec == "U2" || spec == "U3") {
    return {fixture_unitary(fixture_id_from_string(spec)).matrix, spec};
  }
  const json doc = read_json(spec);
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw CliError(ExitCode::parse, spec + ": expected an object with \"matrix\"");
  }
  return {parse_matrix(doc["matrix"], spec), spec};
}

std::array<double, 4> parse_weights(const std::string& text) {
  std::array<double, 4> w{};
  std::size_t start = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t comma = text.find(',', start);
    if ((k < 3) == (comma == std::string::npos)) {
      throw CliError(ExitCode::parse, "--weights expects four comma-separated values");
    }
    w[k] = parse_rational(text.substr(start, comma == std::string::npos ? comma : comma - start));
    start = comma + 1;
  }
  return w;
}

}  // namespace absfef::cli
