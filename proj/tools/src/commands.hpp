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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absfef/fef.hpp"
#include "state_io.hpp"

namespace absfef::cli {

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::optional<int> restarts;
  double tol = 1e-8;
  bool json = false;

  FefOptions fef() const { return {restarts, seed, tol}; }
};

/// Either a family with its flags or a state file.
struct StateSource {
  std::optional<FamilyInput> family;
  std::optional<std::string> path;
};

DensityMatrix load(const StateSource& source);
Json describe(const StateSource& source);

void cmd_analyze(const StateSource& source, const GlobalOptions& options, std::ostream& out);

/// Throws CliError(no_witness) when no unitary is given and the state is in
/// the absolute set.
void cmd_witness(const std::optional<std::string>& unitary,
                 const std::optional<StateSource>& state, std::ostream& out);

struct ScanRange {
  double start;
  double stop;
  double step;
};

/// "a:b:step", rational literals allowed.
ScanRange parse_range(const std::string& text);
std::vector<double> grid(const ScanRange& range);

inline constexpr const char* kScanHeader = "param,lambda_max,fef_lower_bound,fef,label,boundary";

void cmd_scan(const FamilyInput& family, const std::string& param, const ScanRange& range,
              const GlobalOptions& options, std::ostream& out);

void cmd_bounds(int d, int samples, const GlobalOptions& options, std::ostream& out);

/// Entry point shared by the executable and the integration tests. `args`
/// excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace absfef::cli
