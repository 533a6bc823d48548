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

#include <optional>

#include "absfef/matcore.hpp"

namespace absfef {

/// Hermitian operator that is nonnegative on every absolute state.
///
/// `base` is the canonical teleportation witness I/d - |psi+><psi+|. When a
/// pullback unitary U is recorded, matrix == U^dagger base U.
struct WitnessOperator {
  ComplexMatrix matrix;
  int d = 0;
  ComplexMatrix base;
  std::optional<ComplexMatrix> pullback_unitary;
};

/// W = I/d - |psi+><psi+| on C^d (x) C^d.
WitnessOperator teleportation_witness(int d);

/// S = U^dagger W U. Throws ValidationError if U is not unitary within 1e-10.
WitnessOperator pullback(const WitnessOperator& w, const ComplexMatrix& u);

/// Tr(S rho).
double evaluate(const WitnessOperator& s, const DensityMatrix& rho);
double evaluate(const ComplexMatrix& s, const ComplexMatrix& rho);

/// Expansion H = sum_ij c_ij B_i (x) B_j over a single-site basis.
struct BasisDecomposition {
  BasisKind kind;
  RealMatrix coefficients;  // (i, j) indexes operator_basis(kind).elements

  ComplexMatrix reconstruct() const;
  /// Nonzero terms (|c| > cutoff) as "c * Bi x Bj" pairs in basis order.
  std::vector<std::pair<std::string, double>> terms(double cutoff = 1e-12) const;
};

/// Orthogonal kinds use c_ij = Tr[(B_i x B_j) H] / (|B_i|^2 |B_j|^2). The
/// polarization set is overcomplete; it gets the minimum-norm least-squares
/// coefficients.
BasisDecomposition decompose(const ComplexMatrix& h, BasisKind kind);

}  // namespace absfef
