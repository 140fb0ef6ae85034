// Copyright 2026 The qutrit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qutrit {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Matrix2c = Eigen::Matrix2cd;

/// Default slack for every state predicate (purity, positivity, membership).
inline constexpr double kDefaultTol = 1e-9;

/// Raised when a matrix fails a structural check (Hermiticity, trace,
/// unitarity, determinant).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a Bloch vector or matrix does not describe a physical state.
/// Carries the name of the violated constraint and the offending value.
class StateError : public std::domain_error {
 public:
  StateError(std::string constraint, double value, const std::string& what)
      : std::domain_error(what), constraint_(std::move(constraint)), value_(value) {}

  const std::string& constraint() const noexcept { return constraint_; }
  double value() const noexcept { return value_; }

 private:
  std::string constraint_;
  double value_;
};

}  // namespace qutrit
