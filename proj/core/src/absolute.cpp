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

#include "absfef/absolute.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "absfef/errors.hpp"
#include "absfef/states.hpp"

namespace absfef {

namespace {

// Orthonormal basis whose first column is `lead`, completed over e_0, e_1, ...
ComplexMatrix complete_basis(const ComplexVector& lead) {
  const Eigen::Index n = lead.size();
  ComplexMatrix basis(n, n);
  basis.col(0) = lead.normalized();
  Eigen::Index filled = 1;
  for (Eigen::Index e = 0; e < n && filled < n; ++e) {
    ComplexVector v = ComplexVector::Unit(n, e);
    // Modified Gram-Schmidt, applied twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < filled; ++k) {
        v -= basis.col(k).dot(v) * basis.col(k);
      }
    }
    const double norm = v.norm();
    if (norm > 1e-8) basis.col(filled++) = v / norm;
  }
  return basis;
}

// Euclidean projection of x onto {0 <= y_i <= cap, sum y = total}.
std::vector<double> project_capped_simplex(const std::vector<double>& x, double cap,
                                           double total) {
  auto mass = [&](double shift) {
    double s = 0.0;
    for (double v : x) s += std::clamp(v - shift, 0.0, cap);
    return s;
  };
  double lo = *std::min_element(x.begin(), x.end()) - cap - 1.0;
  double hi = *std::max_element(x.begin(), x.end()) + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mass(mid) > total ? lo : hi) = mid;
  }
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::clamp(x[i] - 0.5 * (lo + hi), 0.0, cap);
  return y;
}

std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n, double total) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> x(n);
  for (double& v : x) v = expo(rng);
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v *= total / sum;
  return x;
}

double sum_sq(const std::vector<double>& x) {
  return std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
}

// Maximize sum x^2 over the capped simplex by pairwise mass transfers. The
// objective is convex along every transfer, so the best move sits at an end
// of the feasible interval.
double maximize_capped(std::vector<double> x, double cap, std::mt19937_64& rng) {
  const std::size_t n = x.size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const int rounds = static_cast<int>(64 * n * n);
  for (int it = 0; it < rounds; ++it) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    // x_i += t, x_j -= t
    const double t_lo = std::max(-x[i], x[j] - cap);
    const double t_hi = std::min(cap - x[i], x[j]);
    auto gain = [&](double t) { return 2.0 * t * (x[i] - x[j]) + 2.0 * t * t; };
    const double t = gain(t_hi) >= gain(t_lo) ? t_hi : t_lo;
    if (gain(t) > 0.0) {
      x[i] += t;
      x[j] -= t;
    }
  }
  return sum_sq(x);
}

// Minimize sum x^2 over {0 <= x_i <= cap, sum x = total} by pairwise averaging.
double minimize_capped(std::vector<double> x, std::mt19937_64& rng) {
  const std::size_t n = x.size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const int rounds = static_cast<int>(256 * n * n);
  for (int it = 0; it < rounds; ++it) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const double mean = 0.5 * (x[i] + x[j]);
    x[i] = x[j] = mean;
  }
  return sum_sq(x);
}

}  // namespace

AbsoluteVerdict is_absolute_fef(const DensityMatrix& rho) {
  const int d = rho.local_dim();
  AbsoluteVerdict v;
  v.threshold = 1.0 / d;
  v.lambda_max = eig_hermitian(rho.matrix()).max();
  v.absolute = v.lambda_max <= v.threshold + kDecisionTol;
  v.boundary = std::abs(v.lambda_max - v.threshold) <= kDecisionTol;
  return v;
}

double max_global_fef(const DensityMatrix& rho) {
  rho.local_dim();
  return eig_hermitian(rho.matrix()).max();
}

ComplexMatrix activating_unitary(const DensityMatrix& rho) {
  const int d = rho.local_dim();
  const Spectrum spec = eig_hermitian(rho.matrix());
  const ComplexMatrix target = complete_basis(max_entangled(d));
  return target * spec.eigenvectors.adjoint();
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::useful:
      return "USEFUL";
    case Label::activatable:
      return "ACTIVATABLE";
    case Label::absolute:
      return "ABSOLUTE";
  }
  return "UNKNOWN";
}

ClassificationReport classify(const DensityMatrix& rho, const FefOptions& options) {
  const AbsoluteVerdict verdict = is_absolute_fef(rho);
  ClassificationReport report;
  report.lambda_max = verdict.lambda_max;
  report.threshold = verdict.threshold;
  report.fef = fef(rho, options);
  report.fef_value = report.fef.value;

  if (verdict.absolute) {
    report.label = Label::absolute;
    report.boundary = verdict.boundary;
    report.k_copy_nonlocal = false;
    report.teleportation_useful = false;
  } else if (report.fef_value > report.threshold + kDecisionTol) {
    report.label = Label::useful;
    report.boundary = false;
    report.k_copy_nonlocal = true;
    report.teleportation_useful = true;
  } else {
    // The activated state U rho U^dagger has FEF lambda_max > 1/d.
    report.label = Label::activatable;
    report.boundary = std::abs(report.fef_value - report.threshold) <= kDecisionTol;
    report.k_copy_nonlocal = true;
    report.teleportation_useful = false;
  }
  return report;
}

bool is_absolutely_separable_2q(std::span<const double> spectrum) {
  if (spectrum.size() != 4) {
    throw DomainError("is_absolutely_separable_2q: expected 4 eigenvalues");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (spectrum[k] < -1e-12) throw DomainError("is_absolutely_separable_2q: negative eigenvalue");
    if (k > 0 && spectrum[k] > spectrum[k - 1] + 1e-12) {
      throw DomainError("is_absolutely_separable_2q: spectrum not descending");
    }
    sum += spectrum[k];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("is_absolutely_separable_2q: eigenvalues must sum to 1");
  }
  const double l2 = std::max(spectrum[1], 0.0);
  const double l4 = std::max(spectrum[3], 0.0);
  return spectrum[0] <= spectrum[2] + 2.0 * std::sqrt(l2 * l4) + 1e-12;
}

double purity(const DensityMatrix& rho) { return hs_inner(rho.matrix(), rho.matrix()).real(); }

PurityBounds purity_bounds(int d, int samples, std::uint64_t seed) {
  if (d < 2) throw DomainError("purity_bounds: d must be >= 2, got " + std::to_string(d));
  if (samples < 1) throw DomainError("purity_bounds: samples must be >= 1");
  const std::size_t n = static_cast<std::size_t>(d) * d;
  const double cap = 1.0 / d;

  PurityBounds out;
  out.d = d;
  out.max_purity_absolute = 1.0 / d;
  out.min_purity_nonabsolute = 1.0 / (d * d) + (d - 1.0) / (d * d * (d + 1.0));
  out.min_attained = false;
  out.max_spectrum.assign(n, 0.0);
  std::fill_n(out.max_spectrum.begin(), d, cap);
  out.min_spectrum.assign(n, 1.0 / (d * (d + 1.0)));
  out.min_spectrum.front() = cap;

  std::mt19937_64 rng(seed);
  double best_max = 0.0;
  for (int s = 0; s < samples; ++s) {
    auto start = project_capped_simplex(random_simplex(rng, n, 1.0), cap, 1.0);
    best_max = std::max(best_max, maximize_capped(std::move(start), cap, rng));
  }
  out.max_purity_numeric = best_max;

  for (double eps : {1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
    const double lead = cap + eps;
    double best_min = 1.0;
    for (int s = 0; s < samples; ++s) {
      auto rest = project_capped_simplex(random_simplex(rng, n - 1, 1.0 - lead), lead, 1.0 - lead);
      best_min = std::min(best_min, lead * lead + minimize_capped(std::move(rest), rng));
    }
    out.min_purity_numeric.push_back({eps, best_min});
  }
  return out;
}

}  // namespace absfef
