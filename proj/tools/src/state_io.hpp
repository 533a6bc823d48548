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

#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "absfef/matcore.hpp"
#include "format.hpp"

namespace absfef::cli {

enum class ExitCode : int {
  ok = 0,
  fixture_failure = 1,
  parse = 2,
  domain = 3,
  no_witness = 4,
  io = 5,
};

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// A named family plus the scalar flags given for it. `weights` feeds the
/// diagonal families.
struct FamilyInput {
  std::string name;
  std::map<std::string, double> scalars;
  std::optional<std::array<double, 4>> weights;
};

/// Scalar flags accepted by a family, e.g. {"q"} for x2. Throws CliError
/// (parse) for unknown names.
const std::vector<std::string>& family_parameters(const std::string& name);

/// Builds the two-party state. Aliases: iso2, iso3, and the two-party
/// marginals ghzw (p) and three_qutrit (alpha, beta).
DensityMatrix build_family(const FamilyInput& input);

Json describe(const FamilyInput& input);

/// {"dims": [a, b], "matrix": [[[re, im], ...], ...]}
DensityMatrix read_state_file(const std::string& path);

struct UnitaryInput {
  ComplexMatrix matrix;
  std::string source;
};

/// A fixture id (U1, U2, U3) or a file holding {"matrix": ...}.
UnitaryInput read_unitary(const std::string& spec);

std::array<double, 4> parse_weights(const std::string& text);

}  // namespace absfef::cli
