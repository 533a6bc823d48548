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
#include <optional>
#include <vector>

#include "absfef/matcore.hpp"

namespace absfef {

/// Canonical five-amplitude form of a pure three-qubit state:
///   x0|000> + x1 e^{i theta}|100> + x2|101> + x3|110> + x4|111>
struct AcinParams {
  std::array<double, 5> x{};
  double theta = 0.0;
};

/// Throws DomainError unless x_i >= 0, sum x_i^2 = 1 (1e-12) and theta in [0, pi].
void validate(const AcinParams& params);

ComplexVector acin_state(const AcinParams& params);

/// Closed-form S_k for the marginal obtained by dropping qubit k (1-based).
/// The marginal spectrum is {(1 +- sqrt S_k)/2, 0, 0}.
///   S_1 = 1 - 4 x0^2 (x2^2 + x3^2 + x4^2)
///   S_2 = 1 - 4 (x0^2 x3^2 + x2^2 x3^2 - 2 cos(theta) x1 x2 x3 x4 + x0^2 x4^2 + x1^2 x4^2)
///   S_3 = 1 - 4 (x0^2 x2^2 + x2^2 x3^2 - 2 cos(theta) x1 x2 x3 x4 + x0^2 x4^2 + x1^2 x4^2)
double acin_s_value(const AcinParams& params, int drop);

/// Two-party marginal of a three-party state together with its verdict.
struct MarginalReport {
  int dropped;                          // 1-based party index
  DensityMatrix marginal;
  Spectrum spectrum;                    // numeric, from the partial trace
  std::vector<double> closed_form;      // descending, from the family formula
  std::optional<double> s_value;        // Acin family only
  bool absolute;
  bool boundary;
};

MarginalReport acin_marginal(const AcinParams& params, int drop);

/// Marginal of p |GHZ><GHZ| + (1 - p) |W><W|; identical for every drop.
/// Absolute iff p >= 1/4 (slack 1e-9).
MarginalReport ghzw_marginal(double p, int drop = 1);

/// Marginal of alpha |GHZ_3><GHZ_3| + beta |psi_3><psi_3| + (1 - alpha - beta) I/27.
MarginalReport three_qutrit_marginal(double alpha, double beta, int drop = 1);

/// The 4x4 and 9x9 marginals in closed form, as explicit matrices.
ComplexMatrix ghzw_marginal_matrix(double p);
ComplexMatrix three_qutrit_marginal_matrix(double alpha, double beta);

/// Three-party density matrices behind the marginal reports.
ComplexMatrix ghzw_state(double p);
ComplexMatrix three_qutrit_state(double alpha, double beta);

}  // namespace absfef
