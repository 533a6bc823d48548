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

#include "absfef/fef.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "absfef/errors.hpp"
#include "absfef/states.hpp"

namespace absfef {

namespace {

constexpr int kMaxPolls = 200000;
constexpr double kInitialStep = 0.5;

int require_supported(const DensityMatrix& rho) {
  const int d = rho.local_dim();
  if (d != 2 && d != 3) {
    throw DomainError("fef: local dimension " + std::to_string(d) + " not supported (2 or 3)");
  }
  return d;
}

// Sub-seed for restart r; depends only on (seed, r).
std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), 0x5eedu};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

class LocalSearch {
 public:
  LocalSearch(const DensityMatrix& rho, int d, double tol)
      : rho_(rho.matrix()), d_(d), generators_(hermitian_generators(d)),
        min_step_(std::sqrt(tol)) {}

  double objective(const ComplexMatrix& u) const {
    // (I (x) U)|psi+> has amplitude U(j, i)/sqrt(d) on |i j>.
    ComplexVector v(d_ * d_);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d_));
    for (int i = 0; i < d_; ++i) {
      for (int j = 0; j < d_; ++j) v(i * d_ + j) = amp * u(j, i);
    }
    return v.dot(rho_ * v).real();
  }

  struct Outcome {
    ComplexMatrix u;
    double value;
    bool converged;
  };

  Outcome run(ComplexMatrix u) const {
    double best = objective(u);
    double step = kInitialStep;
    std::vector<ComplexMatrix> moves = step_moves(step);
    int polls = 0;
    while (step >= min_step_) {
      bool improved = false;
      for (const ComplexMatrix& move : moves) {
        ComplexMatrix candidate = u * move;
        const double value = objective(candidate);
        ++polls;
        if (value > best) {
          best = value;
          u = std::move(candidate);
          improved = true;
        }
      }
      if (polls > kMaxPolls) return {u, best, false};
      if (!improved) {
        step *= 0.5;
        moves = step_moves(step);
      }
    }
    return {u, best, true};
  }

  const std::vector<ComplexMatrix>& generators() const { return generators_; }

 private:
  std::vector<ComplexMatrix> step_moves(double step) const {
    std::vector<ComplexMatrix> moves;
    moves.reserve(2 * generators_.size());
    for (const ComplexMatrix& g : generators_) {
      moves.push_back(expi_hermitian(step * g));
      moves.push_back(moves.back().adjoint());
    }
    return moves;
  }

  const ComplexMatrix& rho_;
  int d_;
  std::vector<ComplexMatrix> generators_;
  double min_step_;
};

}  // namespace

int default_restarts(int d) { return d == 2 ? 20 : 60; }

ComplexMatrix expi_hermitian(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()));
  const ComplexVector phases =
      solver.eigenvalues().unaryExpr([](double x) { return std::polar(1.0, x); });
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

std::vector<ComplexMatrix> hermitian_generators(int d) {
  std::vector<ComplexMatrix> out;
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  for (int k = 0; k < d; ++k) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(k, k) = 1.0;
    out.push_back(std::move(m));
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = sym(k, j) = r;
      out.push_back(std::move(sym));
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(j, k) = -i * r;
      anti(k, j) = i * r;
      out.push_back(std::move(anti));
    }
  }
  return out;
}

double fef_objective(const DensityMatrix& rho, const ComplexMatrix& u) {
  const int d = rho.local_dim();
  if (u.rows() != d || u.cols() != d) throw ShapeError("fef_objective: U must be d x d");
  const ComplexVector v = kron(ComplexMatrix::Identity(d, d), u) * max_entangled(d);
  return v.dot(rho.matrix() * v).real();
}

double fef_lower_bound(const DensityMatrix& rho) {
  const ComplexVector psi = max_entangled(rho.local_dim());
  return psi.dot(rho.matrix() * psi).real();
}

FefResult fef(const DensityMatrix& rho, const FefOptions& options) {
  const int d = require_supported(rho);
  const int restarts = options.restarts.value_or(default_restarts(d));
  if (restarts < 1) throw DomainError("fef: restarts must be >= 1");
  if (!(options.tol > 0.0)) throw DomainError("fef: tol must be positive");

  const LocalSearch search(rho, d, options.tol);
  const auto& generators = search.generators();

  FefResult best;
  best.value = -1.0;
  best.restarts_used = restarts;
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(restart_seed(options.seed, r));
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (const ComplexMatrix& g : generators) h += angle(rng) * g;

    auto outcome = search.run(r == 0 ? ComplexMatrix::Identity(d, d) : expi_hermitian(h));
    if (outcome.value > best.value) {
      best.value = outcome.value;
      best.optimizer_unitary = std::move(outcome.u);
      best.converged = outcome.converged;
    }
  }
  return best;
}

double fef_two_qubit_closed_form(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw DomainError("fef_two_qubit_closed_form: requires a two-qubit state");
  }
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  ComplexMatrix magic(4, 4);
  // Columns: (|00>+|11>)/r2, i(|00>-|11>)/r2, i(|01>+|10>)/r2, (|01>-|10>)/r2
  magic << r, i * r, 0, 0,
           0, 0, i * r, r,
           0, 0, i * r, -r,
           r, -i * r, 0, 0;
  const ComplexMatrix in_magic = magic.adjoint() * rho.matrix() * magic;
  const RealMatrix real_part = 0.5 * (in_magic.real() + in_magic.real().transpose());
  return Eigen::SelfAdjointEigenSolver<RealMatrix>(real_part, Eigen::EigenvaluesOnly)
      .eigenvalues()
      .maxCoeff();
}

}  // namespace absfef
