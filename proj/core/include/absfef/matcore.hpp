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

// Dense complex linear algebra shared by every other module: Kronecker
// products, Hermitian spectra, partial traces, Hilbert-Schmidt products,
// density-matrix validation and the fixed single-site operator bases.
//
// Composite indices are row-major lexicographic: for two qubits the order is
// |00>, |01>, |10>, |11>; for two qutrits |00>, |01>, ..., |22>.

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace absfef {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsdFloor = 1e-10;
inline constexpr double kReconstruction = 1e-9;
inline constexpr double kUnitary = 1e-10;
}  // namespace tol

/// Kronecker product A (x) B.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Largest entrywise |M - M^dagger|. Throws ShapeError for non-square input.
double hermiticity_defect(const ComplexMatrix& m);

/// Largest entrywise |U^dagger U - I|.
double unitarity_defect(const ComplexMatrix& u);

/// Tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues in descending order.
struct Spectrum {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors; // column k belongs to eigenvalues[k]

  double max() const { return eigenvalues(0); }
  Eigen::Index size() const { return eigenvalues.size(); }
  /// Sum of squared eigenvalues; the purity when taken from a state.
  double sum_of_squares() const { return eigenvalues.squaredNorm(); }
  ComplexMatrix reconstruct() const;
};

/// Throws ValidationError("hermitian", ...) if the input is not Hermitian
/// within tol::kHermitian.
Spectrum eig_hermitian(const ComplexMatrix& h);

/// Names the first violated density-matrix invariant.
struct Diagnostic {
  std::string invariant;  // "shape", "hermitian", "trace" or "positivity"
  double magnitude = 0.0;
  std::string message;
};

/// A validated bipartite state on C^dimA (x) C^dimB.
///
/// Instances only come out of validate_density(), so every live object is
/// Hermitian, unit-trace and positive semidefinite within the tolerances
/// passed there.
class DensityMatrix {
 public:
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Local dimension d for a d (x) d state; throws DomainError otherwise.
  int local_dim() const;
  bool is_square_bipartition() const { return dim_a_ == dim_b_; }

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, int, int, double);
  DensityMatrix(ComplexMatrix m, int dim_a, int dim_b)
      : matrix_(std::move(m)), dim_a_(dim_a), dim_b_(dim_b) {}

  ComplexMatrix matrix_;
  int dim_a_;
  int dim_b_;
};

/// Returns nullopt when `m` is a valid density matrix for the given split.
std::optional<Diagnostic> check_density(const ComplexMatrix& m, int dim_a, int dim_b,
                                        double tolerance = 1e-10);

/// Validates and wraps `m`; throws ValidationError carrying the Diagnostic.
/// The stored matrix is symmetrized, (M + M^dagger)/2.
DensityMatrix validate_density(const ComplexMatrix& m, int dim_a, int dim_b,
                               double tolerance = 1e-10);

/// Projector |psi><psi| (psi is used as given, not normalized).
ComplexMatrix projector(const ComplexVector& psi);

/// Traces out subsystem `drop` (0-based) of an operator on the tensor product
/// of spaces with dimensions `dims`.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims, int drop);

/// Partial trace of a density operator. The remaining subsystems are grouped
/// as (first remaining) x (product of the rest).
DensityMatrix partial_trace_state(const ComplexMatrix& m, std::span<const int> dims, int drop);

enum class BasisKind { pauli, gellmann, polarization };

std::string_view to_string(BasisKind kind);
BasisKind basis_kind_from_string(std::string_view name);

/// A fixed set of single-site operators.
///
/// pauli:        {I, sx, sy, sz}
/// gellmann:     {I, L1, ..., L8}
/// polarization: projectors onto |H>, |V>, |D>, |F>, |L>, |R>
struct OperatorBasis {
  BasisKind kind;
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> elements;
  std::vector<double> normalization;  // Tr(B^dagger B)

  std::size_t size() const { return elements.size(); }
  int site_dim() const { return static_cast<int>(elements.front().rows()); }
};

const OperatorBasis& operator_basis(BasisKind kind);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Gell-Mann matrix L_k, k = 1..8.
ComplexMatrix gell_mann(int k);

}  // namespace absfef
