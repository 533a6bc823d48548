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

#include "reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

#include "absfef/absolute.hpp"
#include "absfef/bloch.hpp"
#include "absfef/states.hpp"
#include "absfef/tripartite.hpp"
#include "absfef/witness.hpp"
#include "format.hpp"

namespace absfef::cli {

namespace {

constexpr double kExact = 1e-12;
constexpr double kOptimizer = 1e-6;

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix ket_bra(int dim, int row, int col) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(row, col) = 1.0;
  return m;
}

DensityMatrix family(Family f, std::map<std::string, double> params = {}) {
  return construct({f, std::move(params)});
}

class Table {
 public:
  void value(std::string name, double expected, double computed, double tolerance) {
    rows_.push_back({std::move(name), expected, computed, tolerance});
  }
  void zero(std::string name, double residual, double tolerance = kExact) {
    value(std::move(name), 0.0, residual, tolerance);
  }
  void holds(std::string name, bool ok) { value(std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0); }

  std::vector<FixtureRow> take() { return std::move(rows_); }

 private:
  std::vector<FixtureRow> rows_;
};

void state_fixtures(Table& t) {
  const ComplexMatrix phi2 = projector(max_entangled(2));
  const DensityMatrix x1 = family(Family::x1);
  t.holds("X1 is a density matrix", !check_density(x1.matrix(), 2, 2).has_value());
  t.zero("X1 equals its reference mixture",
         max_abs(x1.matrix() - (2.0 / 9 * phi2 + 1.0 / 9 * ket_bra(4, 1, 1) +
                                1.0 / 9 * ket_bra(4, 2, 2) + 5.0 / 9 * ket_bra(4, 0, 0))));

  ComplexVector phi2_ket = ComplexVector::Zero(4);
  phi2_ket(0) = phi2_ket(3) = 1.0 / std::sqrt(2.0);
  t.zero("|phi_2+> amplitudes", (max_entangled(2) - phi2_ket).cwiseAbs().maxCoeff());
  ComplexVector phi3_ket = ComplexVector::Zero(9);
  phi3_ket(0) = phi3_ket(4) = phi3_ket(8) = 1.0 / std::sqrt(3.0);
  t.zero("|phi_3+> amplitudes", (max_entangled(3) - phi3_ket).cwiseAbs().maxCoeff());

  ComplexMatrix af = ComplexMatrix::Zero(4, 4);
  af.diagonal() << 0.5, 0.3, 0.2, 0.0;
  t.zero("diag(0.5, 0.3, 0.2, 0) state", max_abs(family(Family::af_not_as_example).matrix() - af));

  const ComplexMatrix u1 = fixture_unitary(FixtureId::U1).matrix;
  t.zero("U1 X1 U1^dag equals the reference mixture",
         max_abs(rotate(x1, u1).matrix() - (5.0 / 9 * phi2 + 1.0 / 9 * ket_bra(4, 1, 1) +
                                            1.0 / 9 * ket_bra(4, 2, 2) + 2.0 / 9 * ket_bra(4, 3, 3))));

  const ComplexMatrix u2 = fixture_unitary(FixtureId::U2).matrix;
  for (double q : {0.1, 0.3, 0.7}) {
    const ComplexMatrix reference = 0.5 * (ket_bra(4, 0, 0) + ket_bra(4, 3, 3)) +
                                  (0.5 - q) * (ket_bra(4, 0, 3) + ket_bra(4, 3, 0));
    t.zero("U2 X2 U2^dag reference form, q = " + format_double(q),
           max_abs(rotate(family(Family::x2, {{"q", q}}), u2).matrix() - reference));
  }

  const ComplexMatrix u3 = fixture_unitary(FixtureId::U3).matrix;
  t.zero("U3 unitarity defect", unitarity_defect(u3));
  for (double q : {0.2, 0.6}) {
    // |00>, |10>, |22> sit at indices 0, 3, 8
    ComplexMatrix reference = ComplexMatrix::Zero(9, 9);
    reference(0, 0) = reference(8, 8) = (3.0 - q) / 6.0;
    reference(0, 8) = reference(8, 0) = (3.0 - 5.0 * q) / 6.0;
    reference(3, 3) = reference(3, 8) = reference(8, 3) = q / 3.0;
    reference(0, 3) = reference(3, 0) = -q / 3.0;
    t.zero("U3 Y3 U3^dag reference form, q = " + format_double(q),
           max_abs(rotate(family(Family::y3, {{"q", q}}), u3).matrix() - reference));
  }
}

void witness_fixtures(Table& t) {
  const WitnessOperator w2 = teleportation_witness(2);
  const WitnessOperator w3 = teleportation_witness(3);
  const WitnessOperator s1 = pullback(w2, fixture_unitary(FixtureId::U1).matrix);
  const WitnessOperator s2 = pullback(w2, fixture_unitary(FixtureId::U2).matrix);
  const WitnessOperator s3 = pullback(w3, fixture_unitary(FixtureId::U3).matrix);
  const ComplexMatrix i4 = ComplexMatrix::Identity(4, 4);

  t.zero("S1 = U1^dag W U1 reference matrix",
         max_abs(s1.matrix - 0.5 * (i4 - 2.0 * ket_bra(4, 0, 0))));
  t.zero("S2 = U2^dag W U2 reference matrix", max_abs(s2.matrix - (0.5 * i4 - ket_bra(4, 1, 1))));

  t.value("Tr(S1 X1)", -1.0 / 6.0, evaluate(s1, family(Family::x1)), kExact);
  for (double q : {0.1, 0.3, 0.49}) {
    t.value("Tr(S2 X2), q = " + format_double(q), q - 0.5,
            evaluate(s2, family(Family::x2, {{"q", q}})), kExact);
  }
  for (double q : {0.1, 1.0 / 3.0}) {
    t.value("Tr(S3 Y3), q = " + format_double(q), (2.0 * q - 1.0) / 3.0,
            evaluate(s3, family(Family::y3, {{"q", q}})), kExact);
  }

  RealMatrix c1 = RealMatrix::Zero(4, 4);
  c1(0, 0) = 0.25;
  c1(3, 0) = c1(0, 3) = c1(3, 3) = -0.25;
  RealMatrix c2 = RealMatrix::Zero(4, 4);
  c2(0, 0) = c2(0, 3) = c2(3, 3) = 0.25;
  c2(3, 0) = -0.25;
  t.zero("S1 Pauli coefficients",
         (decompose(s1.matrix, BasisKind::pauli).coefficients - c1).cwiseAbs().maxCoeff());
  t.zero("S2 Pauli coefficients",
         (decompose(s2.matrix, BasisKind::pauli).coefficients - c2).cwiseAbs().maxCoeff());

  const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
  const double r3 = std::sqrt(3.0);
  const ComplexMatrix a = 0.5 * gell_mann(3) + gell_mann(8) / (2.0 * r3) + i3 / 3.0;
  const ComplexMatrix b = -0.5 * gell_mann(3) + gell_mann(8) / (2.0 * r3) + i3 / 3.0;
  const ComplexMatrix c = -gell_mann(8) / r3 + i3 / 3.0;
  const ComplexMatrix closed =
      (kron(i3, i3) -
       (kron(gell_mann(1), gell_mann(6)) - kron(gell_mann(2), gell_mann(7))) / std::sqrt(2.0) -
       2.0 * kron(a, b) - kron(b, c)) /
      3.0;
  t.zero("S3 Gell-Mann closed form", max_abs(closed - s3.matrix), 1e-10);
  t.zero("S3 Gell-Mann reconstruction",
         max_abs(decompose(s3.matrix, BasisKind::gellmann).reconstruct() - s3.matrix), 1e-10);
}

void fef_fixtures(Table& t, const FefOptions& options) {
  const DensityMatrix x1 = family(Family::x1);
  t.value("FEF(X1)", 0.5, fef(x1, options).value, kOptimizer);
  t.value("FEF(U1 X1 U1^dag)", 2.0 / 3.0,
          fef(rotate(x1, fixture_unitary(FixtureId::U1).matrix), options).value, kOptimizer);
  const ComplexMatrix u2 = fixture_unitary(FixtureId::U2).matrix;
  for (int k = 1; k <= 9; ++k) {
    const double q = k / 10.0;
    t.value("FEF(U2 X2 U2^dag), q = " + format_double(q), 0.5 * (1.0 + std::abs(2.0 * q - 1.0)),
            fef(rotate(family(Family::x2, {{"q", q}}), u2), options).value, kOptimizer);
  }
  for (int d : {2, 3}) {
    t.value("FEF(|phi_" + std::to_string(d) + "+>)", 1.0,
            fef(family(Family::max_entangled, {{"d", d}}), options).value, kOptimizer);
  }
  for (int k = 1; k <= 5; ++k) {
    const double q = k / 10.0;
    const double value = fef(family(Family::x2, {{"q", q}}), options).value;
    t.holds("FEF(X2) <= 1/2, q = " + format_double(q), value <= 0.5 + kOptimizer);
  }
}

void absolute_fixtures(Table& t, const FefOptions& options) {
  const DensityMatrix af = family(Family::af_not_as_example);
  const AbsoluteVerdict verdict = is_absolute_fef(af);
  t.holds("diag(0.5, 0.3, 0.2, 0) is absolute, on the boundary", verdict.absolute && verdict.boundary);
  t.holds("diag(0.5, 0.3, 0.2, 0) is not absolutely separable",
          !is_absolutely_separable_2q(std::vector<double>{0.5, 0.3, 0.2, 0.0}));
  t.holds("diag(0.5, 0.3, 0.2, 0) passes the diagonal Bloch criterion",
          classII_membership(0.5, 0.3, 0.2, 0.0));

  for (int d : {2, 3}) {
    const double cut = 1.0 / (d + 1);
    bool agree = true;
    for (int k = 0; k <= 100; ++k) {
      const double beta = -1.0 / (d * d - 1.0) + (1.0 + 1.0 / (d * d - 1.0)) * k / 100.0;
      const bool expected = beta <= cut + 1e-12;
      agree = agree && is_absolute_fef(family(Family::isotropic, {{"d", d}, {"beta", beta}})).absolute == expected;
    }
    const AbsoluteVerdict at_cut = is_absolute_fef(family(Family::isotropic, {{"d", d}, {"beta", cut}}));
    t.holds("isotropic d = " + std::to_string(d) + " absolute iff beta <= 1/(d+1)",
            agree && at_cut.absolute && at_cut.boundary);
  }

  const DensityMatrix x2 = family(Family::x2, {{"q", 0.3}});
  t.value("canonical overlap after activating_unitary, X2 q = 0.3", 0.7,
          fef_lower_bound(rotate(x2, activating_unitary(x2))), kExact);

  t.holds("X1 is ACTIVATABLE", classify(family(Family::x1), options).label == Label::activatable);
  t.holds("isotropic d = 2, beta = 0.9 is USEFUL",
          classify(family(Family::isotropic, {{"d", 2}, {"beta", 0.9}}), options).label ==
              Label::useful);
  const ClassificationReport iso3 =
      classify(family(Family::isotropic, {{"d", 3}, {"beta", 0.25}}), options);
  t.holds("isotropic d = 3, beta = 1/4 is ABSOLUTE, on the boundary",
          iso3.label == Label::absolute && iso3.boundary);

  const PurityBounds two = purity_bounds(2);
  t.value("max purity, absolute set, d = 2", 0.5, two.max_purity_absolute, kExact);
  t.value("max purity numeric, d = 2", 0.5, two.max_purity_numeric, kOptimizer);
  t.value("min purity outside, d = 2", 1.0 / 3.0, two.min_purity_nonabsolute, kExact);
  t.value("min purity numeric, d = 2", 1.0 / 3.0, two.min_purity_numeric.back().value, kOptimizer);
  const PurityBounds three = purity_bounds(3);
  t.value("max purity, absolute set, d = 3", 1.0 / 3.0, three.max_purity_absolute, kExact);
  t.value("min purity outside, d = 3", 1.0 / 6.0, three.min_purity_nonabsolute, kExact);

  t.value("a3 of diag(0.4, 0.3, 0.2, 0.1)", 0.2,
          bloch_extract(family(Family::comp_diag, {{"a", 0.4}, {"b", 0.3}, {"c", 0.2}, {"d", 0.1}})).a(2),
          kExact);
}

void tripartite_fixtures(Table& t) {
  const MarginalReport quarter = ghzw_marginal(0.25);
  const double expected[] = {0.5, 0.375, 0.125, 0.0};
  for (int k = 0; k < 4; ++k) {
    t.value("GHZ-W marginal eigenvalue " + std::to_string(k + 1) + ", p = 1/4", expected[k],
            quarter.spectrum.eigenvalues(k), kExact);
  }
  t.holds("GHZ-W marginal at p = 1/4 is absolute, on the boundary",
          quarter.absolute && quarter.boundary);
  bool flips = true;
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    flips = flips && ghzw_marginal(p).absolute == (p >= 0.25);
  }
  t.holds("GHZ-W marginal absolute iff p >= 1/4", flips);
  double reference_gap = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    reference_gap = std::max(reference_gap, max_abs(ghzw_marginal(p).marginal.matrix() -
                                                ghzw_marginal_matrix(p)));
  }
  t.zero("GHZ-W marginal equals the reference matrix", reference_gap);

  const double h = 1.0 / std::sqrt(2.0);
  const MarginalReport ghz = acin_marginal({{h, 0, 0, 0, h}, 0.0}, 1);
  ComplexMatrix reduced = ComplexMatrix::Zero(4, 4);
  reduced(0, 0) = 0.5;
  reduced(3, 3) = 0.5;
  t.zero("first-qubit marginal of GHZ in five-amplitude form", max_abs(ghz.marginal.matrix() - reduced));

  bool all_absolute = true;
  double qutrit_gap = 0.0;
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; i + j <= 10; ++j) {
      const MarginalReport r = three_qutrit_marginal(i / 10.0, j / 10.0);
      all_absolute = all_absolute && r.absolute;
      qutrit_gap = std::max(qutrit_gap,
                            max_abs(r.marginal.matrix() - three_qutrit_marginal_matrix(i / 10.0, j / 10.0)));
    }
  }
  t.holds("three-qutrit marginals absolute on the (alpha, beta) grid", all_absolute);
  t.zero("three-qutrit marginal equals the reference matrix", qutrit_gap);
}

}  // namespace

double FixtureRow::delta() const { return std::abs(computed - expected); }

bool FixtureRow::pass() const { return delta() <= tolerance; }

std::vector<FixtureRow> run_fixtures(const FefOptions& options) {
  Table t;
  state_fixtures(t);
  witness_fixtures(t);
  fef_fixtures(t, options);
  absolute_fixtures(t, options);
  tripartite_fixtures(t);
  return t.take();
}

ExitCode cmd_reproduce(const GlobalOptions& options, std::ostream& out) {
  return report_fixtures(run_fixtures(options.fef()), options.json, out);
}

ExitCode report_fixtures(const std::vector<FixtureRow>& rows, bool json, std::ostream& out) {
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const FixtureRow& r) { return !r.pass(); });

  if (json) {
    Json list = Json::array();
    for (const FixtureRow& r : rows) {
      list.push_back({{"fixture", r.name},
                      {"expected", r.expected},
                      {"computed", r.computed},
                      {"delta", r.delta()},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass()}});
    }
    out << Json{{"fixtures", std::move(list)},
                {"passed", static_cast<long>(rows.size()) - failed},
                {"failed", failed}}
               .dump(2)
        << '\n';
  } else {
    std::size_t width = 7;
    for (const FixtureRow& r : rows) width = std::max(width, r.name.size());
    out << std::left << std::setw(static_cast<int>(width)) << "fixture" << "  " << std::setw(25)
        << "expected" << std::setw(25) << "computed" << std::setw(25) << "|delta|" << std::setw(8)
        << "tol" << "status\n";
    for (const FixtureRow& r : rows) {
      out << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(25)
          << format_double(r.expected) << std::setw(25) << format_double(r.computed)
          << std::setw(25) << format_double(r.delta()) << std::setw(8)
          << format_double(r.tolerance) << (r.pass() ? "pass" : "FAIL") << '\n';
    }
    out << rows.size() - static_cast<std::size_t>(failed) << '/' << rows.size()
        << " fixtures passed\n";
  }
  return failed == 0 ? ExitCode::ok : ExitCode::fixture_failure;
}

}  // namespace absfef::cli
