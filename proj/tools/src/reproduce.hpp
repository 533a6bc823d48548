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

#include <ostream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace absfef::cli {

struct FixtureRow {
  std::string name;
  double expected;
  double computed;
  double tolerance;

  double delta() const;
  bool pass() const;
};

/// Every reference value with a closed form or a reference matrix behind it.
std::vector<FixtureRow> run_fixtures(const FefOptions& options);

ExitCode cmd_reproduce(const GlobalOptions& options, std::ostream& out);

/// Table or JSON document; fixture_failure if any row fails.
ExitCode report_fixtures(const std::vector<FixtureRow>& rows, bool json, std::ostream& out);

}  // namespace absfef::cli
