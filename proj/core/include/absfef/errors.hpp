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

#include <stdexcept>
#include <string>

namespace absfef {

// Input failed a structural check (hermiticity, trace, positivity, unitarity).
// `magnitude` carries the size of the violation.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, double magnitude, const std::string& what)
      : std::runtime_error(what), invariant_(std::move(invariant)), magnitude_(magnitude) {}

  const std::string& invariant() const noexcept { return invariant_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  std::string invariant_;
  double magnitude_;
};

// Operand shapes do not conform.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter outside the validity domain of an operation or family.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace absfef
