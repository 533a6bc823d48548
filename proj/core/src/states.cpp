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

#include "absfef/states.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "absfef/errors.hpp"

namespace absfef {

namespace {

constexpr double kSimplexTol = 1e-12;

ComplexVector basis_ket(int dim, int index) {
  ComplexVector k = ComplexVector::Zero(dim);
  k(index) = 1.0;
  return k;
}

void require_in(const char* family, const char* name, double value, double lo, bool lo_open,
                double hi) {
  const bool below = lo_open ? !(value > lo) : !(value >= lo);
  if (below || !(value <= hi)) {
    throw DomainError(std::string(family) + ": " + name + " = " + std::to_string(value) +
                      " outside " + (lo_open ? "(" : "[") + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
}

int require_dim(const char* family, double value) {
  if (value < 2 || value != std::floor(value) || value > 16) {
    throw DomainError(std::string(family) + ": d must be an integer in [2, 16], got " +
                      std::to_string(value));
  }
  return static_cast<int>(value);
}

std::array<double, 4> simplex_weights(const FamilySpec& spec, const char* family) {
  std::array<double, 4> w{spec.param("a"), spec.param("b"), spec.param("c"), spec.param("d")};
  double sum = 0.0;
  for (double x : w) {
    if (x < 0.0) throw DomainError(std::string(family) + ": weights must be nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSimplexTol) {
    throw DomainError(std::string(family) + ": weights must sum to 1, got " +
                      std::to_string(sum));
  }
  return w;
}

// q |psi+_d><psi+_d| + (1 - q) |01><01|
ComplexMatrix activatable_mixture(int d, double q) {
  return q * projector(max_entangled(d)) + (1.0 - q) * projector(basis_ket(d * d, 1));
}

}  // namespace

ComplexVector max_entangled(int d) {
  if (d < 2) throw DomainError("max_entangled: d must be >= 2, got " + std::to_string(d));
  ComplexVector psi = ComplexVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) psi(i * d + i) = amp;
  return psi;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::x1: return "x1";
    case Family::x2: return "x2";
    case Family::y3: return "y3";
    case Family::isotropic: return "isotropic";
    case Family::comp_diag: return "comp_diag";
    case Family::bell_diag: return "bell_diag";
    case Family::ghz: return "ghz";
    case Family::w: return "w";
    case Family::af_not_as_example: return "af_not_as_example";
    case Family::max_entangled: return "max_entangled";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::x1, Family::x2, Family::y3, Family::isotropic, Family::comp_diag,
                   Family::bell_diag, Family::ghz, Family::w, Family::af_not_as_example,
                   Family::max_entangled}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

double FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) {
    throw DomainError(std::string(to_string(family)) + ": missing parameter '" + name + "'");
  }
  return it->second;
}

double FamilySpec::param_or(const std::string& name, double fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

double parse_rational(std::string_view text) {
  auto parse_double = [](std::string_view s) {
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    }
    return value;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_double(text.substr(0, slash));
    const double den = parse_double(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_double(text);
}

DensityMatrix construct(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::x1: {
      ComplexMatrix m = (2.0 / 9.0) * projector(max_entangled(2));
      m(1, 1) += 1.0 / 9.0;
      m(2, 2) += 1.0 / 9.0;
      m(0, 0) += 5.0 / 9.0;
      return validate_density(m, 2, 2);
    }
    case Family::x2: {
      const double q = spec.param("q");
      require_in("x2", "q", q, 0.0, true, 1.0);
      return validate_density(activatable_mixture(2, q), 2, 2);
    }
    case Family::y3: {
      const double q = spec.param("q");
      require_in("y3", "q", q, 0.0, true, 1.0);
      return validate_density(activatable_mixture(3, q), 3, 3);
    }
    case Family::isotropic: {
      const int d = require_dim("isotropic", spec.param_or("d", 2));
      const double beta = spec.param("beta");
      const double lo = -1.0 / (d * d - 1.0);
      // Admit round-off on the reference lower endpoint.
      require_in("isotropic", "beta", beta, lo - 1e-12, false, 1.0);
      const ComplexMatrix m = beta * projector(max_entangled(d)) +
                              ((1.0 - beta) / (d * d)) * ComplexMatrix::Identity(d * d, d * d);
      return validate_density(m, d, d);
    }
    case Family::comp_diag: {
      const auto w = simplex_weights(spec, "comp_diag");
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      for (int i = 0; i < 4; ++i) m(i, i) = w[i];
      return validate_density(m, 2, 2);
    }
    case Family::bell_diag: {
      const auto w = simplex_weights(spec, "bell_diag");
      const double r = 1.0 / std::sqrt(2.0);
      ComplexVector phi_p(4), phi_m(4), psi_p(4), psi_m(4);
      phi_p << r, 0, 0, r;
      phi_m << r, 0, 0, -r;
      psi_p << 0, r, r, 0;
      psi_m << 0, r, -r, 0;
      const ComplexMatrix m = w[0] * projector(phi_p) + w[1] * projector(phi_m) +
                              w[2] * projector(psi_p) + w[3] * projector(psi_m);
      return validate_density(m, 2, 2);
    }
    case Family::ghz: {
      ComplexVector psi = ComplexVector::Zero(8);
      psi(0) = psi(7) = 1.0 / std::sqrt(2.0);
      return validate_density(projector(psi), 2, 4);
    }
    case Family::w: {
      ComplexVector psi = ComplexVector::Zero(8);
      psi(1) = psi(2) = psi(4) = 1.0 / std::sqrt(3.0);
      return validate_density(projector(psi), 2, 4);
    }
    case Family::af_not_as_example: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = 0.5;
      m(1, 1) = 0.3;
      m(2, 2) = 0.2;
      return validate_density(m, 2, 2);
    }
    case Family::max_entangled: {
      const int d = require_dim("max_entangled", spec.param_or("d", 2));
      return validate_density(projector(max_entangled(d)), d, d);
    }
  }
  throw DomainError("unknown family");
}

FixtureId fixture_id_from_string(std::string_view name) {
  if (name == "U1" || name == "u1") return FixtureId::U1;
  if (name == "U2" || name == "u2") return FixtureId::U2;
  if (name == "U3" || name == "u3") return FixtureId::U3;
  throw DomainError("unknown fixture unitary '" + std::string(name) + "'");
}

FixtureUnitary fixture_unitary(FixtureId id) {
  const double s = std::sqrt(2.0);
  const double r = 1.0 / s;
  ComplexMatrix u;
  switch (id) {
    case FixtureId::U1:
      u.resize(4, 4);
      u << r, 0, 0, -r,
           0, 1, 0, 0,
           0, 0, 1, 0,
           r, 0, 0, r;
      break;
    case FixtureId::U2:
      u.resize(4, 4);
      u << -1, s, 0, -1,
            0, 0, 2, 0,
           -s, 0, 0, s,
            1, s, 0, 1;
      u *= 0.5;
      break;
    case FixtureId::U3:
      u = ComplexMatrix::Zero(9, 9);
      u(0, 0) = -1;
      u(0, 1) = s;
      u(0, 8) = -1;
      for (int row = 1; row <= 6; ++row) u(row, row + 1) = 2;
      u(7, 0) = -s;
      u(7, 8) = s;
      u(8, 0) = 1;
      u(8, 1) = s;
      u(8, 8) = 1;
      u *= 0.5;
      break;
  }
  const double defect = unitarity_defect(u);
  if (defect > 1e-12) {
    throw ValidationError("unitary", defect, "fixture unitary is not unitary");
  }
  return {id, u};
}

DensityMatrix rotate(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw ShapeError("rotate: unitary shape does not match the state");
  }
  return validate_density(u * rho.matrix() * u.adjoint(), rho.dim_a(), rho.dim_b());
}

}  // namespace absfef
