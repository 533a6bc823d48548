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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "absfef/bloch.hpp"
#include "absfef/errors.hpp"
#include "absfef/states.hpp"
#include "support/random_states.hpp"

namespace absfef {
namespace {

DensityMatrix comp_diag(double a, double b, double c, double d) {
  return construct({Family::comp_diag, {{"a", a}, {"b", b}, {"c", c}, {"d", d}}});
}

TEST(BlochExtract, MaximallyMixed) {
  const BlochParams p =
      bloch_extract(validate_density(ComplexMatrix::Identity(4, 4) / 4.0, 2, 2));
  EXPECT_LE(p.a.norm() + p.b.norm() + p.t.norm(), 1e-15);
}

TEST(BlochExtract, BellState) {
  const BlochParams p = bloch_extract(construct({Family::max_entangled, {{"d", 2}}}));
  EXPECT_LE(p.a.norm() + p.b.norm(), 1e-15);
  Eigen::Matrix3d expect = Eigen::Vector3d(0.25, -0.25, 0.25).asDiagonal();
  EXPECT_LE((p.t - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BlochExtract, DiagonalStateMatchesClosedForm) {
  const BlochParams p = bloch_extract(comp_diag(0.4, 0.3, 0.2, 0.1));
  const ClassIIBloch q = classII_bloch(0.4, 0.3, 0.2, 0.1);
  EXPECT_NEAR(p.a(2), (0.4 + 0.3 - 0.2 - 0.1) / 2.0, 1e-15);
  EXPECT_NEAR(p.a(2), q.a3, 1e-15);
  EXPECT_NEAR(p.b(2), q.b3, 1e-15);
  EXPECT_NEAR(p.t(2, 2), q.t33, 1e-15);
}

TEST(BlochExtract, RoundTripOnRandomStates) {
  testing::Rng rng(73);
  for (int t = 0; t < 500; ++t) {
    const DensityMatrix rho = testing::random_state(rng, 2, 2);
    EXPECT_LE(testing::max_abs(bloch_extract(rho).reconstruct() - rho.matrix()), 1e-12);
  }
}

TEST(BlochExtract, RejectsQutrits) {
  EXPECT_THROW(bloch_extract(construct({Family::isotropic, {{"d", 3}, {"beta", 0.1}}})),
               DomainError);
}

TEST(ClassI, Fixtures) {
  EXPECT_TRUE(classI_membership(0, 0, 0).member);
  const ClassIResult bell = classI_membership(0.25, -0.25, 0.25);
  EXPECT_FALSE(bell.member);
  EXPECT_NEAR(*std::max_element(bell.eigenvalues.begin(), bell.eigenvalues.end()), 1.0, 1e-15);
}

TEST(ClassI, WernerBoundary) {
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    if (std::abs(p - 1.0 / 3.0) < 1e-6) continue;
    EXPECT_EQ(classI_membership(-p / 4, -p / 4, -p / 4).member, p <= 1.0 / 3.0) << p;
  }
  const double third = 1.0 / 3.0;
  EXPECT_TRUE(classI_membership(-third / 4, -third / 4, -third / 4).member);
}

TEST(ClassI, RejectsNonPositiveTriples) {
  EXPECT_THROW(classI_membership(0.3, 0.3, 0.3), DomainError);
  EXPECT_THROW(classI_membership(0.5, 0.0, 0.0), DomainError);
}

TEST(ClassI, AgreesWithSpectrum) {
  testing::Rng rng(79);
  int disagreements = 0;
  for (int t = 0; t < 100000; ++t) {
    const auto l = testing::random_spectrum(rng, 4);
    std::array<double, 4> lam{l[0], l[1], l[2], l[3]};
    std::shuffle(lam.begin(), lam.end(), rng);
    const double t11 = (lam[1] + lam[2] - lam[3] - lam[0]) / 4.0;
    const double t22 = (lam[1] + lam[3] - lam[2] - lam[0]) / 4.0;
    const double t33 = (lam[2] + lam[3] - lam[1] - lam[0]) / 4.0;
    BlochParams p;
    p.t = Eigen::Vector3d(t11, t22, t33).asDiagonal();
    const double lambda_max = eig_hermitian(p.reconstruct()).max();
    if (std::abs(lambda_max - 0.5) < 1e-10) continue;
    if (classI_membership(t11, t22, t33).member != (lambda_max <= 0.5)) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(ClassII, Fixtures) {
  EXPECT_TRUE(classII_membership(0.5, 0.3, 0.2, 0.0));
  EXPECT_FALSE(classII_membership(0.6, 0.2, 0.1, 0.1));
  EXPECT_TRUE(classII_membership(0.25, 0.25, 0.25, 0.25));
  EXPECT_FALSE(classII_membership(0.1, 0.1, 0.1, 0.7));
  EXPECT_FALSE(classII_membership(0.1, 0.7, 0.1, 0.1));
}

// The reference case reduction "4a - 1 <= 1/2" rejects a state that the
// spectral criterion accepts.
TEST(ClassII, ReferenceConstantDiscrepancy) {
  const double a = 0.45, b = 0.25, c = 0.2, d = 0.1;
  EXPECT_TRUE(classII_membership(a, b, c, d));
  EXPECT_LE(eig_hermitian(comp_diag(a, b, c, d).matrix()).max(), 0.5);
  EXPECT_GT(4 * a - 1, 0.5);
  EXPECT_LE(2 * a - 0.5, 0.5);
}

TEST(ClassII, RejectsInvalidWeights) {
  EXPECT_THROW(classII_membership(0.5, 0.5, 0.5, -0.5), DomainError);
  EXPECT_THROW(classII_membership(0.5, 0.3, 0.2, 0.1), DomainError);
}

TEST(ClassII, AgreesWithMaxWeight) {
  testing::Rng rng(83);
  int disagreements = 0;
  for (int t = 0; t < 100000; ++t) {
    auto w = testing::random_spectrum(rng, 4);
    std::shuffle(w.begin(), w.end(), rng);
    w[3] = 1.0 - w[0] - w[1] - w[2];
    if (w[3] < 0.0) continue;
    const double top = *std::max_element(w.begin(), w.end());
    if (std::abs(top - 0.5) < 1e-10) continue;
    if (classII_membership(w[0], w[1], w[2], w[3]) != (top <= 0.5)) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(ClassII, SignMatchedIdentities) {
  testing::Rng rng(89);
  for (int t = 0; t < 10000; ++t) {
    auto w = testing::random_spectrum(rng, 4);
    std::shuffle(w.begin(), w.end(), rng);
    const auto [a3, b3, t33] = classII_bloch(w[0], w[1], w[2], w[3]);
    EXPECT_NEAR(0.25 + t33 + 0.5 * std::abs(a3 + b3), std::max(w[0], w[3]), 1e-12);
    EXPECT_NEAR(0.25 - t33 + 0.5 * std::abs(a3 - b3), std::max(w[1], w[2]), 1e-12);
  }
}

}  // namespace
}  // namespace absfef
