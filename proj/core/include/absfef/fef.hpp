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

#include "absfef/matcore.hpp"

namespace absfef {

struct FefOptions {
  std::optional<int> restarts;  // unset picks default_restarts(d)
  std::uint64_t seed = 0;
  double tol = 1e-8;             // objective-improvement tolerance of the local search
};

/// Best achieved value of the fully entangled fraction maximization.
///
/// `value` is an attained objective value, hence a certified lower bound on
/// the true FEF. Re-evaluating fef_objective at `optimizer_unitary`
/// reproduces it.
struct FefResult {
  double value = 0.0;
  ComplexMatrix optimizer_unitary;  // d x d, acts on the second party
  int restarts_used = 0;
  bool converged = false;
};

int default_restarts(int d);

/// <psi+| (I (x) U^dagger) rho (I (x) U) |psi+>.
double fef_objective(const DensityMatrix& rho, const ComplexMatrix& u);

/// Canonical overlap <psi+|rho|psi+>, the objective at U = I.
double fef_lower_bound(const DensityMatrix& rho);

/// Multistart local maximization over U(d) for d in {2, 3}.
///
/// Restart 0 starts at the identity. Every later restart draws a random
/// Hermitian generator with coefficients uniform in [-pi, pi]. Each one runs
/// a compass search on the d^2 generator directions, halving the step until
/// it drops below sqrt(tol). Restart r is seeded from (seed, r) alone, so the
/// result is deterministic and non-decreasing in the number of restarts.
FefResult fef(const DensityMatrix& rho, const FefOptions& options = {});

/// Two-qubit FEF as the largest eigenvalue of Re(rho) written in the magic
/// basis. Throws DomainError unless rho is 2 x 2.
double fef_two_qubit_closed_form(const DensityMatrix& rho);

/// exp(i H) for Hermitian H.
ComplexMatrix expi_hermitian(const ComplexMatrix& h);

/// Orthonormal (Hilbert-Schmidt) basis of d x d Hermitian matrices, d^2 elements.
std::vector<ComplexMatrix> hermitian_generators(int d);

}  // namespace absfef
