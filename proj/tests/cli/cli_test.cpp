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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "absfef/states.hpp"
#include "commands.hpp"
#include "format.hpp"
#include "reproduce.hpp"

namespace absfef::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("absfef_cli_test_" + name);
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream(path) << doc.dump();
}

Json state_document(const ComplexMatrix& m, int dim_a, int dim_b) {
  return {{"dims", {dim_a, dim_b}}, {"matrix", matrix_to_json(m)}};
}

TEST(ExitCodes, Success) {
  EXPECT_EQ(invoke({"analyze", "--family", "x1"}).code, 0);
  EXPECT_EQ(invoke({"bounds", "--d", "2"}).code, 0);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(ExitCodes, FixtureFailure) {
  std::ostringstream out;
  const std::vector<FixtureRow> rows{{"holds", 1.0, 1.0, 0.0}, {"off", 0.5, 0.4, 1e-6}};
  EXPECT_EQ(report_fixtures(rows, false, out), ExitCode::fixture_failure);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
  EXPECT_NE(out.str().find("1/2 fixtures passed"), std::string::npos);
  std::ostringstream ok;
  EXPECT_EQ(report_fixtures({rows.front()}, true, ok), ExitCode::ok);
}

TEST(ExitCodes, ParseErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"analyze"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--family", "nope"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--family", "x2", "--q", "abc"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--family", "x2"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--family", "x1", "--q", "0.3"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--family", "x2", "--param", "q", "--range", "0.1:0.2"}).code, 2);
  EXPECT_EQ(invoke({"--restarts", "many", "analyze", "--family", "x1"}).code, 2);
}

TEST(ExitCodes, TraceDiagnostic) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 0.9;
  const auto path = temp_path("trace.json");
  write_file(path, state_document(m, 2, 2));
  const Outcome o = invoke({"analyze", "--input", path.string()});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("trace"), std::string::npos);
}

TEST(ExitCodes, MalformedStateFile) {
  const auto path = temp_path("garbage.json");
  std::ofstream(path) << "{\"dims\": [2, 2], \"matrix\": [[1, 2]]";
  EXPECT_EQ(invoke({"analyze", "--input", path.string()}).code, 2);
  write_file(path, {{"dims", {2, 2}}, {"matrix", {{1, 2}}}});
  EXPECT_EQ(invoke({"analyze", "--input", path.string()}).code, 2);
}

TEST(ExitCodes, DomainErrors) {
  EXPECT_EQ(invoke({"bounds", "--d", "1"}).code, 3);
  EXPECT_EQ(invoke({"analyze", "--family", "x2", "--q", "1.5"}).code, 3);
  EXPECT_EQ(invoke({"--restarts", "0", "analyze", "--family", "x1"}).code, 3);
}

TEST(ExitCodes, NoWitness) {
  const Outcome o = invoke({"witness", "--state", "iso2", "--beta", "0.0"});
  EXPECT_EQ(o.code, 4);
  EXPECT_NE(o.err.find("no detecting witness exists"), std::string::npos);
}

TEST(ExitCodes, InputOutput) {
  EXPECT_EQ(invoke({"analyze", "--input", temp_path("missing.json").string()}).code, 5);
  EXPECT_EQ(invoke({"scan", "--family", "x2", "--param", "q", "--range", "0.1:0.2:0.1", "--out",
                    "/nonexistent-dir/out.csv"})
                .code,
            5);
}

TEST(Analyze, ReferenceFamilies) {
  const Json x1 = Json::parse(invoke({"analyze", "--family", "x1"}).out);
  EXPECT_EQ(x1["label"], "ACTIVATABLE");
  EXPECT_NEAR(x1["lambda_max"].get<double>(), (7.0 + std::sqrt(29.0)) / 18.0, 1e-12);
  EXPECT_EQ(x1["k_copy_nonlocal"], "true");
  EXPECT_FALSE(x1["absolutely_separable"].get<bool>());

  const Json iso = Json::parse(invoke({"analyze", "--family", "isotropic", "--d", "3", "--beta", "0.25"}).out);
  EXPECT_EQ(iso["label"], "ABSOLUTE");
  EXPECT_TRUE(iso["boundary"].get<bool>());
  EXPECT_EQ(iso["k_copy_nonlocal"], "unknown");
  EXPECT_FALSE(iso.contains("bloch"));
}

TEST(Analyze, StateFileMatchesFamily) {
  const auto path = temp_path("x2.json");
  write_file(path, state_document(construct({Family::x2, {{"q", 0.3}}}).matrix(), 2, 2));
  Json from_file = Json::parse(invoke({"analyze", "--input", path.string()}).out);
  Json from_family = Json::parse(invoke({"analyze", "--family", "x2", "--q", "3/10"}).out);
  from_file.erase("source");
  from_family.erase("source");
  EXPECT_EQ(from_file, from_family);
}

TEST(Witness, FixtureUnitaryFile) {
  Json unitary{{"matrix", matrix_to_json(fixture_unitary(FixtureId::U1).matrix)}};
  const auto path = temp_path("U1.json");
  write_file(path, unitary);
  const Outcome o = invoke({"witness", "--unitary", path.string(), "--state", "x1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json doc = Json::parse(o.out);
  EXPECT_NEAR(doc["expectation"].get<double>(), -1.0 / 6.0, 1e-12);
  EXPECT_TRUE(doc["detected"].get<bool>());
  EXPECT_EQ(doc["decomposition"]["basis"], "pauli");
  const std::vector<std::pair<std::string, double>> expected{
      {"IxI", 0.25}, {"IxZ", -0.25}, {"ZxI", -0.25}, {"ZxZ", -0.25}};
  const Json& terms = doc["decomposition"]["terms"];
  ASSERT_EQ(terms.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(terms[k]["term"], expected[k].first);
    EXPECT_NEAR(terms[k]["coefficient"].get<double>(), expected[k].second, 1e-12);
  }
}

TEST(Witness, ActivatingUnitaryDetects) {
  const Json doc = Json::parse(invoke({"witness", "--state", "x2", "--q", "0.3"}).out);
  EXPECT_EQ(doc["unitary"]["source"], "activating");
  EXPECT_LT(doc["expectation"].get<double>(), 0.0);
}

TEST(Witness, QutritFixture) {
  const Json doc = Json::parse(invoke({"witness", "--unitary", "U3", "--state", "y3", "--q", "0.1"}).out);
  EXPECT_NEAR(doc["expectation"].get<double>(), (0.2 - 1.0) / 3.0, 1e-12);
  EXPECT_EQ(doc["decomposition"]["basis"], "gellmann");
}

TEST(Witness, UnitaryOnly) {
  const Json doc = Json::parse(invoke({"witness", "--unitary", "U2"}).out);
  EXPECT_FALSE(doc.contains("expectation"));
  EXPECT_EQ(doc["d"], 2);
}

TEST(Scan, HeaderAndRows) {
  const Outcome o = invoke({"scan", "--family", "ghzw", "--param", "p", "--range", "0:1:0.05"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "param,lambda_max,fef_lower_bound,fef,label,boundary");
  int rows = 0;
  while (std::getline(lines, line)) {
    const double p = std::stod(line.substr(0, line.find(',')));
    const bool absolute = line.find(",ABSOLUTE,") != std::string::npos;
    EXPECT_EQ(absolute, p >= 0.25) << line;
    if (!absolute) EXPECT_NE(line.find(",USEFUL,"), std::string::npos) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 21);
}

TEST(Scan, X2StaysBelowHalfUpToHalf) {
  const auto path = temp_path("x2.csv");
  ASSERT_EQ(invoke({"scan", "--family", "x2", "--param", "q", "--range", "0.1:0.9:0.1", "--out",
                    path.string()})
                .code,
            0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 6u);
    if (std::stod(cells[0]) <= 0.5) EXPECT_LE(std::stod(cells[3]), 0.5 + 1e-6) << line;
  }
}

TEST(Scan, IsotropicFlipsAtOneThird) {
  const Outcome o =
      invoke({"scan", "--family", "isotropic", "--d", "2", "--param", "beta", "--range", "-0.333:1:0.05"});
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const double beta = std::stod(line.substr(0, line.find(',')));
    EXPECT_EQ(line.find(",ABSOLUTE,") != std::string::npos, beta <= 1.0 / 3.0) << line;
  }
}

TEST(Grid, EndpointsAndSpacing) {
  EXPECT_EQ(grid(parse_range("0:1:0.05")).size(), 21u);
  EXPECT_EQ(grid(parse_range("0:1:0.05"))[3], 0.15);
  EXPECT_EQ(grid(parse_range("1/3:1/3:1")).size(), 1u);
  EXPECT_THROW(parse_range("1:0:0.1"), CliError);
  EXPECT_THROW(parse_range("0:1:0"), CliError);
}

TEST(Bounds, Tables) {
  const Json two = Json::parse(invoke({"--json", "bounds", "--d", "2"}).out);
  EXPECT_DOUBLE_EQ(two["max_purity_absolute"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(two["min_purity_nonabsolute"].get<double>(), 1.0 / 3.0);
  EXPECT_FALSE(two["min_attained"].get<bool>());
  const Json three = Json::parse(invoke({"bounds", "--d", "3", "--json"}).out);
  EXPECT_DOUBLE_EQ(three["max_purity_absolute"].get<double>(), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(three["min_purity_nonabsolute"].get<double>(), 1.0 / 6.0);
  EXPECT_NE(invoke({"bounds", "--d", "2"}).out.find("infimum, not attained"), std::string::npos);
}

TEST(Reproduce, AllFixturesPass) {
  const Outcome o = invoke({"reproduce", "--json"});
  EXPECT_EQ(o.code, 0);
  const Json doc = Json::parse(o.out);
  EXPECT_EQ(doc["failed"], 0);
  for (const auto& row : doc["fixtures"]) EXPECT_TRUE(row["pass"].get<bool>()) << row.dump();
}

TEST(Reproduce, DegradedOptimizerStillReports) {
  const Outcome o = invoke({"--restarts", "1", "reproduce"});
  EXPECT_TRUE(o.code == 0 || o.code == 1);
  EXPECT_NE(o.out.find("fixtures passed"), std::string::npos);
}

TEST(Determinism, ByteIdenticalReports) {
  const std::vector<std::vector<std::string>> commands{
      {"--seed", "7", "analyze", "--family", "y3", "--q", "0.2"},
      {"witness", "--state", "bell_diag", "--weights", "0.6,0.2,0.1,0.1"},
      {"--seed", "3", "scan", "--family", "y3", "--param", "q", "--range", "0.1:0.5:0.2"},
      {"--json", "bounds", "--d", "3"},
      {"--json", "reproduce"},
  };
  for (const auto& args : commands) {
    const Outcome first = invoke(args);
    const Outcome second = invoke(args);
    EXPECT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
  }
}

TEST(Families, MarginalAliases) {
  const Json ghzw = Json::parse(invoke({"analyze", "--family", "ghzw", "--p", "1/4"}).out);
  EXPECT_EQ(ghzw["label"], "ABSOLUTE");
  EXPECT_TRUE(ghzw["boundary"].get<bool>());
  const Json qutrit =
      Json::parse(invoke({"analyze", "--family", "three_qutrit", "--alpha", "0.2", "--beta", "0.3"}).out);
  EXPECT_EQ(qutrit["label"], "ABSOLUTE");
  const Json diag = Json::parse(invoke({"analyze", "--family", "comp_diag", "--weights", "0.5,0.3,0.2,0"}).out);
  EXPECT_EQ(diag["label"], "ABSOLUTE");
  EXPECT_FALSE(diag["absolutely_separable"].get<bool>());
}

}  // namespace
}  // namespace absfef::cli
