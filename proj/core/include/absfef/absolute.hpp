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
#include <span>
#include <string_view>
#include <vector>

#include "absfef/fef.hpp"
#include "absfef/matcore.hpp"

namespace absfef {

/// Slack used for every "<= 1/d" decision and for boundary flags.
inline constexpr double kDecisionTol = 1e-9;

struct AbsoluteVerdict {
  bool absolute = false;  // lambda_max <= 1/d + kDecisionTol
  bool boundary = false;  // |lambda_max - 1/d| <= kDecisionTol
  double lambda_max = 0.0;
  double threshold = 0.0;  // 1/d
};

/// Spectral membership test: no global unitary can lift the FEF above 1/d
/// iff the largest eigenvalue is at most 1/d.
AbsoluteVerdict is_absolute_fef(const DensityMatrix& rho);

/// Supremum of the FEF over all global unitaries, i.e. lambda_max.
double max_global_fef(const DensityMatrix& rho);

/// Global unitary sum_k |m_k><v_k| with v_k the eigenvectors of rho
/// (descending) and m_1 = |psi+>, so the canonical overlap of U rho U^dagger
/// equals lambda_max. The remaining m_k come from Gram-Schmidt over the
/// computational basis.
ComplexMatrix activating_unitary(const DensityMatrix& rho);

enum class Label { useful, activatable, absolute };
std::string_view to_string(Label label);

struct ClassificationReport {
  Label label = Label::absolute;
  double lambda_max = 0.0;
  double fef_value = 0.0;
  double threshold = 0.0;
  bool boundary = false;
  // False for ABSOLUTE states means "no conclusion", not "local".
  bool k_copy_nonlocal = false;
  bool teleportation_useful = false;
  FefResult fef;

  /// "true" or "unknown"; locality is never asserted.
  std::string_view k_copy_presentation() const { return k_copy_nonlocal ? "true" : "unknown"; }
};

ClassificationReport classify(const DensityMatrix& rho, const FefOptions& options = {});

/// Two-qubit absolute separability from a descending spectrum:
/// l1 <= l3 + 2 sqrt(l2 l4). Throws DomainError for malformed spectra.
bool is_absolutely_separable_2q(std::span<const double> spectrum);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

struct PurityBounds {
  int d = 0;
  double max_purity_absolute = 0.0;      // analytic
  double min_purity_nonabsolute = 0.0;   // analytic infimum
  bool min_attained = false;             // the infimum sits on the open constraint
  std::vector<double> max_spectrum;      // extremal spectrum, descending
  std::vector<double> min_spectrum;      // limiting spectrum, descending

  double max_purity_numeric = 0.0;       // projected random search
  struct EpsilonMinimum {
    double epsilon;
    double value;
  };
  std::vector<EpsilonMinimum> min_purity_numeric;  // lambda_1 = 1/d + epsilon
};

/// Extremal purities of the absolute set. `samples` is the number of random
/// starts for the numeric search.
PurityBounds purity_bounds(int d, int samples = 64, std::uint64_t seed = 0);

}  // namespace absfef
