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

#include "absfef/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "absfef/errors.hpp"

namespace absfef {

namespace {

std::string format_magnitude(const char* what, double value) {
  std::ostringstream os;
  os.precision(6);
  os << what << " violation " << value;
  return os.str();
}

void require_square(const ComplexMatrix& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw ShapeError(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& u) {
  require_square(u, "unitarity_defect");
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("hs_inner: shapes differ");
  }
  // Tr(A^dagger B) = sum_ij conj(A_ij) B_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

ComplexMatrix Spectrum::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

Spectrum eig_hermitian(const ComplexMatrix& h) {
  require_square(h, "eig_hermitian");
  const double defect = hermiticity_defect(h);
  if (defect > tol::kHermitian) {
    throw ValidationError("hermitian", defect, format_magnitude("hermiticity", defect));
  }
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("hermitian", defect, "eigen-decomposition did not converge");
  }
  // Eigen returns ascending order.
  Spectrum out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

int DensityMatrix::local_dim() const {
  if (dim_a_ != dim_b_) {
    throw DomainError("state is " + std::to_string(dim_a_) + "x" + std::to_string(dim_b_) +
                      "; a d x d bipartition is required");
  }
  return dim_a_;
}

std::optional<Diagnostic> check_density(const ComplexMatrix& m, int dim_a, int dim_b,
                                        double tolerance) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    return Diagnostic{"shape", 0.0,
                      "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", dims " + std::to_string(dim_a) + "x" + std::to_string(dim_b)};
  }
  const double herm = hermiticity_defect(m);
  if (herm > tolerance) {
    return Diagnostic{"hermitian", herm, format_magnitude("hermiticity", herm)};
  }
  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > tolerance) {
    return Diagnostic{"trace", trace_err, format_magnitude("trace", trace_err)};
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  const double smallest = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(sym, Eigen::EigenvaluesOnly)
                              .eigenvalues()
                              .minCoeff();
  if (smallest < -tolerance) {
    return Diagnostic{"positivity", -smallest, format_magnitude("positivity", -smallest)};
  }
  return std::nullopt;
}

DensityMatrix validate_density(const ComplexMatrix& m, int dim_a, int dim_b, double tolerance) {
  if (auto diag = check_density(m, dim_a, dim_b, tolerance)) {
    throw ValidationError(diag->invariant, diag->magnitude, diag->message);
  }
  return DensityMatrix(0.5 * (m + m.adjoint()), dim_a, dim_b);
}

ComplexMatrix projector(const ComplexVector& psi) { return psi * psi.adjoint(); }

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims, int drop) {
  require_square(m, "partial_trace");
  if (dims.empty() || std::any_of(dims.begin(), dims.end(), [](int d) { return d < 1; })) {
    throw ShapeError("partial_trace: subsystem dimensions must be positive");
  }
  const long total = std::accumulate(dims.begin(), dims.end(), 1L, std::multiplies<>());
  if (total != m.rows()) {
    throw ShapeError("partial_trace: product of dims " + std::to_string(total) +
                     " does not match matrix dimension " + std::to_string(m.rows()));
  }
  if (drop < 0 || drop >= static_cast<int>(dims.size())) {
    throw ShapeError("partial_trace: subsystem index " + std::to_string(drop) + " out of range");
  }
  // Index = (left * d + k) * right + r with left/right the blocks before/after `drop`.
  long left = 1;
  for (int i = 0; i < drop; ++i) left *= dims[i];
  const long d = dims[drop];
  const long right = total / (left * d);
  const long reduced = left * right;

  ComplexMatrix out = ComplexMatrix::Zero(reduced, reduced);
  for (long l1 = 0; l1 < left; ++l1) {
    for (long r1 = 0; r1 < right; ++r1) {
      for (long l2 = 0; l2 < left; ++l2) {
        for (long r2 = 0; r2 < right; ++r2) {
          Complex acc{0.0, 0.0};
          for (long k = 0; k < d; ++k) {
            acc += m((l1 * d + k) * right + r1, (l2 * d + k) * right + r2);
          }
          out(l1 * right + r1, l2 * right + r2) = acc;
        }
      }
    }
  }
  return out;
}

DensityMatrix partial_trace_state(const ComplexMatrix& m, std::span<const int> dims, int drop) {
  ComplexMatrix reduced = partial_trace(m, dims, drop);
  std::vector<int> rest;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
    if (i != drop) rest.push_back(dims[i]);
  }
  int dim_a = rest.empty() ? 1 : rest.front();
  int dim_b = 1;
  for (std::size_t i = 1; i < rest.size(); ++i) dim_b *= rest[i];
  return validate_density(reduced, dim_a, dim_b);
}

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::pauli:
      return "pauli";
    case BasisKind::gellmann:
      return "gellmann";
    case BasisKind::polarization:
      return "polarization";
  }
  return "unknown";
}

BasisKind basis_kind_from_string(std::string_view name) {
  if (name == "pauli") return BasisKind::pauli;
  if (name == "gellmann" || name == "gell-mann") return BasisKind::gellmann;
  if (name == "polarization") return BasisKind::polarization;
  throw DomainError("unknown basis kind '" + std::string(name) + "'");
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
ComplexMatrix y() {
  const Complex i{0.0, 1.0};
  ComplexMatrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return m;
}
ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

ComplexMatrix gell_mann(int k) {
  const Complex i{0.0, 1.0};
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  switch (k) {
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case 4:
      m(0, 2) = 1.0;
      m(2, 0) = 1.0;
      break;
    case 5:
      m(0, 2) = -i;
      m(2, 0) = i;
      break;
    case 6:
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      break;
    case 7:
      m(1, 2) = -i;
      m(2, 1) = i;
      break;
    case 8: {
      const double s = 1.0 / std::sqrt(3.0);
      m(0, 0) = s;
      m(1, 1) = s;
      m(2, 2) = -2.0 * s;
      break;
    }
    default:
      throw DomainError("Gell-Mann index must be in 1..8, got " + std::to_string(k));
  }
  return m;
}

namespace {

OperatorBasis make_basis(BasisKind kind) {
  OperatorBasis basis{kind, {}, {}, {}};
  switch (kind) {
    case BasisKind::pauli:
      basis.labels = {"I", "X", "Y", "Z"};
      basis.elements = {pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
      break;
    case BasisKind::gellmann:
      basis.labels = {"I", "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8"};
      basis.elements.push_back(ComplexMatrix::Identity(3, 3));
      for (int k = 1; k <= 8; ++k) basis.elements.push_back(gell_mann(k));
      break;
    case BasisKind::polarization: {
      const double r = 1.0 / std::sqrt(2.0);
      const Complex i{0.0, 1.0};
      auto ket = [](Complex h, Complex v) {
        ComplexVector k(2);
        k << h, v;
        return k;
      };
      basis.labels = {"H", "V", "D", "F", "L", "R"};
      for (const ComplexVector& k : {ket(1.0, 0.0), ket(0.0, 1.0), ket(r, r), ket(r, -r),
                                     ket(r, i * r), ket(r, -i * r)}) {
        basis.elements.push_back(projector(k));
      }
      break;
    }
  }
  for (const auto& e : basis.elements) basis.normalization.push_back(hs_inner(e, e).real());
  return basis;
}

}  // namespace

const OperatorBasis& operator_basis(BasisKind kind) {
  static const OperatorBasis kPauli = make_basis(BasisKind::pauli);
  static const OperatorBasis kGellMann = make_basis(BasisKind::gellmann);
  static const OperatorBasis kPolarization = make_basis(BasisKind::polarization);
  switch (kind) {
    case BasisKind::pauli:
      return kPauli;
    case BasisKind::gellmann:
      return kGellMann;
    case BasisKind::polarization:
      return kPolarization;
  }
  throw DomainError("unknown basis kind");
}

}  // namespace absfef
