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

#include "absfef/tripartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "absfef/absolute.hpp"
#include "absfef/errors.hpp"

namespace absfef {

namespace {

constexpr std::array<int, 3> kQubits{2, 2, 2};
constexpr std::array<int, 3> kQutrits{3, 3, 3};
constexpr double kSRoundoff = 1e-14;

void require_drop(int drop) {
  if (drop < 1 || drop > 3) {
    throw DomainError("drop must be 1, 2 or 3, got " + std::to_string(drop));
  }
}

std::vector<double> descending(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

void validate(const AcinParams& params) {
  double norm2 = 0.0;
  for (double x : params.x) {
    if (x < 0.0) throw DomainError("acin: amplitudes x_i must be nonnegative");
    norm2 += x * x;
  }
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw DomainError("acin: sum of x_i^2 is " + std::to_string(norm2) + ", expected 1");
  }
  if (params.theta < 0.0 || params.theta > std::numbers::pi) {
    throw DomainError("acin: theta must lie in [0, pi]");
  }
}

ComplexVector acin_state(const AcinParams& params) {
  validate(params);
  const auto& x = params.x;
  ComplexVector psi = ComplexVector::Zero(8);
  psi(0b000) = x[0];
  psi(0b100) = std::polar(x[1], params.theta);
  psi(0b101) = x[2];
  psi(0b110) = x[3];
  psi(0b111) = x[4];
  return psi;
}

double acin_s_value(const AcinParams& params, int drop) {
  require_drop(drop);
  const auto& x = params.x;
  const double x0 = x[0] * x[0], x1 = x[1] * x[1], x2 = x[2] * x[2], x3 = x[3] * x[3],
               x4 = x[4] * x[4];
  const double cross = 2.0 * std::cos(params.theta) * x[1] * x[2] * x[3] * x[4];
  switch (drop) {
    case 1:
      return 1.0 - 4.0 * x0 * (x2 + x3 + x4);
    case 2:
      return 1.0 - 4.0 * (x0 * x3 + x2 * x3 - cross + x0 * x4 + x1 * x4);
    default:
      return 1.0 - 4.0 * (x0 * x2 + x2 * x3 - cross + x0 * x4 + x1 * x4);
  }
}

MarginalReport acin_marginal(const AcinParams& params, int drop) {
  require_drop(drop);
  const ComplexVector psi = acin_state(params);
  DensityMatrix marginal = partial_trace_state(projector(psi), kQubits, drop - 1);
  Spectrum spectrum = eig_hermitian(marginal.matrix());
  const double s = acin_s_value(params, drop);
  const double root = s > kSRoundoff ? std::sqrt(s) : 0.0;
  const bool absolute = s <= kDecisionTol;
  return MarginalReport{drop,
                        std::move(marginal),
                        std::move(spectrum),
                        {0.5 * (1.0 + root), 0.5 * (1.0 - root), 0.0, 0.0},
                        s,
                        absolute,
                        absolute};
}

ComplexMatrix ghzw_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("ghzw: p must lie in [0, 1]");
  ComplexVector ghz = ComplexVector::Zero(8);
  ghz(0b000) = ghz(0b111) = 1.0 / std::sqrt(2.0);
  ComplexVector w = ComplexVector::Zero(8);
  w(0b001) = w(0b010) = w(0b100) = 1.0 / std::sqrt(3.0);
  return p * projector(ghz) + (1.0 - p) * projector(w);
}

ComplexMatrix ghzw_marginal_matrix(double p) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  const double coh = (1.0 - p) / 3.0;
  m(0, 0) = (2.0 + p) / 6.0;
  m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = coh;
  m(3, 3) = p / 2.0;
  return m;
}

MarginalReport ghzw_marginal(double p, int drop) {
  require_drop(drop);
  DensityMatrix marginal = partial_trace_state(ghzw_state(p), kQubits, drop - 1);
  Spectrum spectrum = eig_hermitian(marginal.matrix());
  const double cut = 0.25;
  return MarginalReport{drop,
                        std::move(marginal),
                        std::move(spectrum),
                        descending({0.0, 2.0 * (1.0 - p) / 3.0, p / 2.0, (2.0 + p) / 6.0}),
                        std::nullopt,
                        p >= cut - kDecisionTol,
                        std::abs(p - cut) <= kDecisionTol};
}

ComplexMatrix three_qutrit_state(double alpha, double beta) {
  if (!(alpha >= 0.0 && beta >= 0.0 && alpha + beta <= 1.0 + 1e-12)) {
    throw DomainError("three_qutrit: need alpha, beta >= 0 and alpha + beta <= 1");
  }
  ComplexVector ghz = ComplexVector::Zero(27);
  for (int i = 0; i < 3; ++i) ghz(i * 9 + i * 3 + i) = 1.0 / std::sqrt(3.0);
  ComplexVector perm = ComplexVector::Zero(27);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const int c = 3 - a - b;
      if (a != b && c >= 0 && c < 3 && c != a && c != b) perm(a * 9 + b * 3 + c) = 1.0 / std::sqrt(6.0);
    }
  }
  const ComplexMatrix m = alpha * projector(ghz) + beta * projector(perm) +
                          ((1.0 - alpha - beta) / 27.0) * ComplexMatrix::Identity(27, 27);
  return m;
}

ComplexMatrix three_qutrit_marginal_matrix(double alpha, double beta) {
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  const double same = (1.0 + 2.0 * alpha - beta) / 9.0;
  const double other = (2.0 - 2.0 * alpha + beta) / 18.0;
  for (int i = 0; i < 9; ++i) m(i, i) = (i % 4 == 0) ? same : other;
  // |ab> <-> |ba> coherences for a != b
  for (auto [r, c] : {std::pair{1, 3}, std::pair{2, 6}, std::pair{5, 7}}) {
    m(r, c) = m(c, r) = beta / 6.0;
  }
  return m;
}

MarginalReport three_qutrit_marginal(double alpha, double beta, int drop) {
  require_drop(drop);
  DensityMatrix marginal = partial_trace_state(three_qutrit_state(alpha, beta), kQutrits, drop - 1);
  Spectrum spectrum = eig_hermitian(marginal.matrix());
  std::vector<double> closed;
  for (double v : {(1.0 - alpha - beta) / 9.0, (1.0 + 2.0 * alpha - beta) / 9.0,
                   (1.0 - alpha + 2.0 * beta) / 9.0}) {
    closed.insert(closed.end(), 3, v);
  }
  closed = descending(std::move(closed));
  const double threshold = 1.0 / 3.0;
  const double top = closed.front();
  return MarginalReport{drop,
                        std::move(marginal),
                        std::move(spectrum),
                        std::move(closed),
                        std::nullopt,
                        top <= threshold + kDecisionTol,
                        std::abs(top - threshold) <= kDecisionTol};
}

}  // namespace absfef
