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

#include "absfef/witness.hpp"

#include <cmath>

#include "absfef/errors.hpp"
#include "absfef/states.hpp"

namespace absfef {

WitnessOperator teleportation_witness(int d) {
  if (d < 2) throw DomainError("teleportation_witness: d must be >= 2");
  const int n = d * d;
  WitnessOperator w;
  w.d = d;
  w.base = ComplexMatrix::Identity(n, n) / static_cast<double>(d) - projector(max_entangled(d));
  w.matrix = w.base;
  return w;
}

WitnessOperator pullback(const WitnessOperator& w, const ComplexMatrix& u) {
  if (u.rows() != w.matrix.rows() || u.cols() != w.matrix.cols()) {
    throw ShapeError("pullback: unitary is " + std::to_string(u.rows()) + "x" +
                     std::to_string(u.cols()) + ", witness is " +
                     std::to_string(w.matrix.rows()) + "x" + std::to_string(w.matrix.cols()));
  }
  const double defect = unitarity_defect(u);
  if (defect > tol::kUnitary) {
    throw ValidationError("unitary", defect, "pullback: U is not unitary (defect " +
                                                 std::to_string(defect) + ")");
  }
  WitnessOperator s;
  s.d = w.d;
  s.base = w.base;
  // Compose with an existing pullback.
  const ComplexMatrix total = w.pullback_unitary ? ComplexMatrix(*w.pullback_unitary * u) : u;
  s.pullback_unitary = total;
  const ComplexMatrix m = u.adjoint() * w.matrix * u;
  s.matrix = 0.5 * (m + m.adjoint());
  return s;
}

double evaluate(const ComplexMatrix& s, const ComplexMatrix& rho) {
  if (s.rows() != rho.rows() || s.cols() != rho.cols()) {
    throw ShapeError("evaluate: witness and state shapes differ");
  }
  // Tr(S rho) = sum_ij S_ij rho_ji = <S^dagger, rho> for Hermitian S.
  return hs_inner(s, rho).real();
}

double evaluate(const WitnessOperator& s, const DensityMatrix& rho) {
  return evaluate(s.matrix, rho.matrix());
}

ComplexMatrix BasisDecomposition::reconstruct() const {
  const OperatorBasis& basis = operator_basis(kind);
  const int n = basis.site_dim() * basis.site_dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double c = coefficients(i, j);
      if (c != 0.0) out += c * kron(basis.elements[i], basis.elements[j]);
    }
  }
  return out;
}

std::vector<std::pair<std::string, double>> BasisDecomposition::terms(double cutoff) const {
  const OperatorBasis& basis = operator_basis(kind);
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (std::abs(coefficients(i, j)) > cutoff) {
        out.emplace_back(basis.labels[i] + "x" + basis.labels[j], coefficients(i, j));
      }
    }
  }
  return out;
}

BasisDecomposition decompose(const ComplexMatrix& h, BasisKind kind) {
  const OperatorBasis& basis = operator_basis(kind);
  const int site = basis.site_dim();
  if (h.rows() != site * site || h.cols() != site * site) {
    throw ShapeError("decompose: " + std::string(to_string(kind)) + " basis expects " +
                     std::to_string(site * site) + "x" + std::to_string(site * site) +
                     " operators, got " + std::to_string(h.rows()) + "x" +
                     std::to_string(h.cols()));
  }
  const double defect = hermiticity_defect(h);
  if (defect > tol::kHermitian) {
    throw ValidationError("hermitian", defect, "decompose: operator is not Hermitian");
  }

  const auto m = static_cast<Eigen::Index>(basis.size());
  BasisDecomposition out{kind, RealMatrix::Zero(m, m)};
  if (kind != BasisKind::polarization) {
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        const ComplexMatrix product = kron(basis.elements[i], basis.elements[j]);
        out.coefficients(i, j) = hs_inner(product, h).real() /
                                 (basis.normalization[i] * basis.normalization[j]);
      }
    }
    return out;
  }

  // Real linear system over vec(H): columns are vec(P_i x P_j) split into
  // real and imaginary parts.
  const Eigen::Index n2 = h.size();
  RealMatrix system(2 * n2, m * m);
  RealVector rhs(2 * n2);
  const Eigen::Map<const ComplexVector> h_vec(h.data(), n2);
  rhs << h_vec.real(), h_vec.imag();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const ComplexMatrix product = kron(basis.elements[i], basis.elements[j]);
      const Eigen::Map<const ComplexVector> p_vec(product.data(), n2);
      system.col(i * m + j) << p_vec.real(), p_vec.imag();
    }
  }
  const RealVector solution = Eigen::CompleteOrthogonalDecomposition<RealMatrix>(system).solve(rhs);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) out.coefficients(i, j) = solution(i * m + j);
  }
  return out;
}

}  // namespace absfef
