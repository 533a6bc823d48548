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

#include <map>
#include <string>
#include <string_view>

#include "absfef/matcore.hpp"

namespace absfef {

/// |psi+> = (1/sqrt d) sum_i |ii>.
ComplexVector max_entangled(int d);

enum class Family {
  x1,                 // 2/9 phi+ + 1/9 |01> + 1/9 |10> + 5/9 |00>
  x2,                 // q phi+ + (1-q) |01>, q in (0, 1]
  y3,                 // qutrit analogue of x2
  isotropic,          // beta psi+ + (1-beta) I/d^2
  comp_diag,          // diag(a, b, c, d) in the computational basis
  bell_diag,          // a phi+ + b phi- + c psi+ + d psi-
  ghz,                // (|000> + |111>)/sqrt 2, split 2 x 4
  w,                  // (|001> + |010> + |100>)/sqrt 3, split 2 x 4
  af_not_as_example,  // diag(0.5, 0.3, 0.2, 0)
  max_entangled,      // |psi+><psi+| for local dimension d
};

std::string_view to_string(Family f);
/// Throws DomainError for unknown names.
Family family_from_string(std::string_view name);

struct FamilySpec {
  Family family;
  std::map<std::string, double> params;

  double param(const std::string& name) const;
  double param_or(const std::string& name, double fallback) const;
};

/// Parses "p/q" or a decimal literal. Throws std::invalid_argument on junk.
double parse_rational(std::string_view text);

/// Density matrix of the named family. Throws DomainError for parameters
/// outside the family's domain.
DensityMatrix construct(const FamilySpec& spec);

enum class FixtureId { U1, U2, U3 };

struct FixtureUnitary {
  FixtureId id;
  ComplexMatrix matrix;
};

FixtureId fixture_id_from_string(std::string_view name);

/// The reference global unitaries U1, U2 (4x4) and U3 (9x9).
FixtureUnitary fixture_unitary(FixtureId id);

/// U rho U^dagger, revalidated.
DensityMatrix rotate(const DensityMatrix& rho, const ComplexMatrix& u);

}  // namespace absfef
