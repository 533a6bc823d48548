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

#pragma once

#include <array>

#include "absfef/matcore.hpp"

namespace absfef {

/// Two-qubit Bloch parameters in the normalization
///   rho = I/4 + 1/2 sum a_i s_i x I + 1/2 sum b_j I x s_j + sum t_ij s_i x s_j
/// so a_i = Tr(rho s_i x I)/2, b_j = Tr(rho I x s_j)/2, t_ij = Tr(rho s_i x s_j)/4.
struct BlochParams {
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  Eigen::Matrix3d t = Eigen::Matrix3d::Zero();

  ComplexMatrix reconstruct() const;
};

BlochParams bloch_extract(const DensityMatrix& rho);

struct ClassIResult {
  bool member = false;
  std::array<double, 4> eigenvalues{};
};

/// States with a = b = 0 and diagonal T. Throws DomainError when the triple
/// does not describe a positive semidefinite matrix.
ClassIResult classI_membership(double t11, double t22, double t33);

/// Diagonal states a|00> + b|01> + c|10> + d|11>, weights in any order.
bool classII_membership(double a, double b, double c, double d);

/// The Bloch quantities (a_3, b_3, t_33) of a computational-basis diagonal state.
struct ClassIIBloch {
  double a3;
  double b3;
  double t33;
};
ClassIIBloch classII_bloch(double a, double b, double c, double d);

}  // namespace absfef
