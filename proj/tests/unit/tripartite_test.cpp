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

#include <cmath>
#include <numbers>

#include "absfef/absolute.hpp"
#include "absfef/errors.hpp"
#include "absfef/states.hpp"
#include "absfef/tripartite.hpp"
#include "support/random_states.hpp"

namespace absfef {
namespace {

const double kHalf = 1.0 / std::sqrt(2.0);

AcinParams ghz_params() { return {{kHalf, 0.0, 0.0, 0.0, kHalf}, 0.0}; }

AcinParams random_params(testing::Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  AcinParams p;
  double norm2 = 0.0;
  for (double& x : p.x) norm2 += (x = std::abs(normal(rng))) * x;
  for (double& x : p.x) x /= std::sqrt(norm2);
  p.theta = angle(rng);
  return p;
}

// The uncorrected expression, kept to document its disagreement with the
// partial trace.
double uncorrected_s1(const AcinParams& p) {
  const double x1 = p.x[1] * p.x[1], x2 = p.x[2] * p.x[2], x3 = p.x[3] * p.x[3],
               x4 = p.x[4] * p.x[4];
  return 1.0 + 4.0 * (x2 + x3 - x4 + x1 * x4 + x3 * (-1.0 + x1 + 2.0 * x4) +
                      x2 * (-1.0 + x1 + 2.0 * x3 + 2.0 * x4));
}

void expect_spectrum(const MarginalReport& r, double tol) {
  ASSERT_EQ(static_cast<Eigen::Index>(r.closed_form.size()), r.spectrum.eigenvalues.size());
  for (std::size_t k = 0; k < r.closed_form.size(); ++k) {
    EXPECT_NEAR(r.spectrum.eigenvalues(static_cast<Eigen::Index>(k)), r.closed_form[k], tol);
  }
}

TEST(AcinState, Fixtures) {
  const ComplexVector ghz = acin_state(ghz_params());
  EXPECT_NEAR(ghz(0b000).real(), kHalf, 1e-15);
  EXPECT_NEAR(ghz(0b111).real(), kHalf, 1e-15);
  EXPECT_NEAR(ghz.norm(), 1.0, 1e-15);

  const ComplexVector product = acin_state({{1, 0, 0, 0, 0}, 0.0});
  EXPECT_NEAR(product(0).real(), 1.0, 1e-15);

  const AcinParams generic{{0.4, 0.3, 0.5, 0.5, std::sqrt(1.0 - 0.75)}, std::numbers::pi / 3};
  const ComplexVector psi = acin_state(generic);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
  EXPECT_NEAR(std::arg(psi(0b100)), std::numbers::pi / 3, 1e-15);
}

TEST(AcinState, RejectsInvalidParameters) {
  EXPECT_THROW(validate({{0.5, 0.5, 0.5, 0.5, 0.5}, 0.0}), DomainError);
  EXPECT_THROW(validate({{-kHalf, 0, 0, 0, kHalf}, 0.0}), DomainError);
  EXPECT_THROW(validate({{kHalf, 0, 0, 0, kHalf}, 4.0}), DomainError);
  EXPECT_THROW(acin_marginal(ghz_params(), 0), DomainError);
  EXPECT_THROW(acin_marginal(ghz_params(), 4), DomainError);
}

TEST(AcinMarginal, GhzDropTwoIsBoundary) {
  const MarginalReport r = acin_marginal(ghz_params(), 2);
  ASSERT_TRUE(r.s_value.has_value());
  EXPECT_NEAR(*r.s_value, 0.0, 1e-15);
  expect_spectrum(r, 1e-12);
  EXPECT_NEAR(r.closed_form[0], 0.5, 1e-15);
  EXPECT_TRUE(r.absolute);
  EXPECT_TRUE(r.boundary);
}

TEST(AcinMarginal, ProductStateIsPure) {
  const MarginalReport r = acin_marginal({{1, 0, 0, 0, 0}, 0.0}, 1);
  EXPECT_NEAR(*r.s_value, 1.0, 1e-15);
  EXPECT_NEAR(r.spectrum.max(), 1.0, 1e-12);
  EXPECT_FALSE(r.absolute);
}

TEST(AcinMarginal, UncorrectedFirstExpressionDisagreesAtGhz) {
  EXPECT_NEAR(uncorrected_s1(ghz_params()), -1.0, 1e-15);
  const MarginalReport r = acin_marginal(ghz_params(), 1);
  EXPECT_NEAR(*r.s_value, 0.0, 1e-15);
  EXPECT_NEAR(r.spectrum.max(), 0.5, 1e-12);
}

TEST(AcinMarginal, ClosedFormMatchesPartialTrace) {
  testing::Rng rng(97);
  for (int t = 0; t < 10000; ++t) {
    const AcinParams p = random_params(rng);
    for (int drop = 1; drop <= 3; ++drop) {
      const MarginalReport r = acin_marginal(p, drop);
      expect_spectrum(r, 1e-10);
      EXPECT_NEAR(r.closed_form[0] + r.closed_form[1], 1.0, 1e-12);
      EXPECT_GE(r.spectrum.max(), 0.5 - 1e-12);
      EXPECT_EQ(r.absolute, r.spectrum.max() <= 0.5 + 1e-9 || *r.s_value <= kDecisionTol);
    }
  }
}

TEST(GhzwMarginal, Fixtures) {
  const MarginalReport quarter = ghzw_marginal(0.25);
  EXPECT_TRUE(quarter.absolute);
  EXPECT_TRUE(quarter.boundary);
  EXPECT_NEAR(quarter.closed_form[0], 0.5, 1e-15);
  EXPECT_NEAR(quarter.closed_form[1], 0.375, 1e-15);
  EXPECT_NEAR(quarter.closed_form[2], 0.125, 1e-15);
  EXPECT_NEAR(quarter.closed_form[3], 0.0, 1e-15);
  expect_spectrum(quarter, 1e-12);

  const MarginalReport ghz = ghzw_marginal(1.0);
  EXPECT_TRUE(ghz.absolute);
  EXPECT_FALSE(ghz.boundary);
  EXPECT_NEAR(ghz.spectrum.max(), 0.5, 1e-12);

  const MarginalReport w = ghzw_marginal(0.0);
  EXPECT_FALSE(w.absolute);
  EXPECT_NEAR(w.spectrum.max(), 2.0 / 3.0, 1e-12);

  EXPECT_THROW(ghzw_marginal(1.5), DomainError);
  EXPECT_THROW(ghzw_marginal(-0.1), DomainError);
}

TEST(GhzwMarginal, MatchesReferenceMatrixForEveryDrop) {
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    for (int drop = 1; drop <= 3; ++drop) {
      const MarginalReport r = ghzw_marginal(p, drop);
      EXPECT_LE(testing::max_abs(r.marginal.matrix() - ghzw_marginal_matrix(p)), 1e-14);
      EXPECT_NEAR(r.marginal.matrix().trace().real(), 1.0, 1e-15);
      expect_spectrum(r, 1e-12);
    }
  }
}

TEST(GhzwMarginal, VerdictAgreesWithSpectrumAwayFromCut) {
  for (int k = 0; k <= 1000; ++k) {
    const double p = k / 1000.0;
    if (std::abs(p - 0.25) < 1e-6) continue;
    const MarginalReport r = ghzw_marginal(p);
    EXPECT_EQ(r.absolute, r.spectrum.max() <= 0.5 + kDecisionTol) << p;
    EXPECT_EQ(r.absolute, p >= 0.25);
  }
}

TEST(ThreeQutritMarginal, Fixtures) {
  const MarginalReport mixed = three_qutrit_marginal(0.0, 0.0);
  for (double v : mixed.closed_form) EXPECT_NEAR(v, 1.0 / 9.0, 1e-15);
  EXPECT_TRUE(mixed.absolute);
  EXPECT_FALSE(mixed.boundary);

  const MarginalReport ghz = three_qutrit_marginal(1.0, 0.0);
  EXPECT_TRUE(ghz.absolute);
  EXPECT_TRUE(ghz.boundary);
  EXPECT_NEAR(ghz.closed_form[0], 1.0 / 3.0, 1e-15);
  expect_spectrum(ghz, 1e-12);

  EXPECT_THROW(three_qutrit_marginal(0.7, 0.7), DomainError);
  EXPECT_THROW(three_qutrit_marginal(-0.1, 0.2), DomainError);
}

TEST(ThreeQutritMarginal, AbsoluteOnWholeTriangle) {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; i + j <= 20; ++j) {
      const double alpha = i / 20.0, beta = j / 20.0;
      const MarginalReport r = three_qutrit_marginal(alpha, beta, 1 + (i + j) % 3);
      EXPECT_TRUE(r.absolute) << alpha << " " << beta;
      EXPECT_LE(testing::max_abs(r.marginal.matrix() - three_qutrit_marginal_matrix(alpha, beta)),
                1e-14);
      expect_spectrum(r, 1e-12);
    }
  }
}

TEST(Properties, CollaboratingPartiesCannotBreachThreshold) {
  testing::Rng rng(101);
  std::vector<MarginalReport> reports;
  reports.push_back(acin_marginal(ghz_params(), 3));
  for (double p : {0.25, 0.5, 1.0}) reports.push_back(ghzw_marginal(p));
  for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{1.0, 0.0}, std::pair{0.3, 0.6}}) {
    reports.push_back(three_qutrit_marginal(a, b));
  }
  for (const MarginalReport& r : reports) {
    ASSERT_TRUE(r.absolute);
    const int d = r.marginal.dim_a();
    for (int k = 0; k < 100; ++k) {
      const ComplexMatrix u = testing::haar_unitary(rng, d * d);
      EXPECT_LE(fef_lower_bound(rotate(r.marginal, u)), 1.0 / d + 1e-9);
    }
  }
}

}  // namespace
}  // namespace absfef
