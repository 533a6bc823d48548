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

#include "absfef/bloch.hpp"

#include <algorithm>
#include <cmath>

#include "absfef/errors.hpp"

namespace absfef {

namespace {

constexpr double kCriterionSlack = 1e-12;

const ComplexMatrix& sigma(int i) {
  static const std::array<ComplexMatrix, 4> kSigma{pauli::identity(), pauli::x(), pauli::y(),
                                                   pauli::z()};
  return kSigma[i];
}

}  // namespace

ComplexMatrix BlochParams::reconstruct() const {
  ComplexMatrix out = 0.25 * ComplexMatrix::Identity(4, 4);
  for (int i = 0; i < 3; ++i) {
    out += 0.5 * a(i) * kron(sigma(i + 1), sigma(0));
    out += 0.5 * b(i) * kron(sigma(0), sigma(i + 1));
    for (int j = 0; j < 3; ++j) out += t(i, j) * kron(sigma(i + 1), sigma(j + 1));
  }
  return out;
}

BlochParams bloch_extract(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw DomainError("bloch_extract: requires a two-qubit state");
  }
  const ComplexMatrix& m = rho.matrix();
  BlochParams p;
  for (int i = 0; i < 3; ++i) {
    p.a(i) = 0.5 * hs_inner(kron(sigma(i + 1), sigma(0)), m).real();
    p.b(i) = 0.5 * hs_inner(kron(sigma(0), sigma(i + 1)), m).real();
    for (int j = 0; j < 3; ++j) {
      p.t(i, j) = 0.25 * hs_inner(kron(sigma(i + 1), sigma(j + 1)), m).real();
    }
  }
  return p;
}

ClassIResult classI_membership(double t11, double t22, double t33) {
  ClassIResult out;
  out.eigenvalues = {0.25 * (1.0 - 4.0 * (t11 + t22 + t33)), 0.25 * (1.0 + 4.0 * (t11 + t22 - t33)),
                     0.25 * (1.0 + 4.0 * (t11 - t22 + t33)), 0.25 * (1.0 + 4.0 * (t22 + t33 - t11))};
  const double smallest = *std::min_element(out.eigenvalues.begin(), out.eigenvalues.end());
  if (smallest < -tol::kPsdFloor) {
    throw DomainError("classI_membership: (t11, t22, t33) gives eigenvalue " +
                      std::to_string(smallest) + " < 0");
  }
  const double worst = std::max({-(t11 + t22 + t33), t11 + t22 - t33, t11 - t22 + t33,
                                  -t11 + t22 + t33});
  out.member = worst <= 0.25 + kCriterionSlack;
  return out;
}

ClassIIBloch classII_bloch(double a, double b, double c, double d) {
  return {(a + b - c - d) / 2.0, (a + c - b - d) / 2.0, (a - b - c + d) / 4.0};
}

bool classII_membership(double a, double b, double c, double d) {
  for (double w : {a, b, c, d}) {
    if (w < 0.0) throw DomainError("classII_membership: weights must be nonnegative");
  }
  if (std::abs(a + b + c + d - 1.0) > 1e-12) {
    throw DomainError("classII_membership: weights must sum to 1");
  }
  const auto [a3, b3, t33] = classII_bloch(a, b, c, d);
  // (|a3 + b3| + 2 t33) pairs with max(a, d); (|a3 - b3| - 2 t33) with max(b, c).
  return std::abs(a3 + b3) + 2.0 * t33 <= 0.5 + kCriterionSlack &&
         std::abs(a3 - b3) - 2.0 * t33 <= 0.5 + kCriterionSlack;
}

}  // namespace absfef
