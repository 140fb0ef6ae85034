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

#include <array>

#include "qutrit/bloch.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

/// Validation tolerances for raw matrices.
inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

/// A qutrit density matrix: Hermitian, unit trace, positive semidefinite.
class Density3 {
 public:
  /// Validates and wraps a raw matrix. Throws ValidationError for
  /// non-Hermitian or wrong-trace input, StateError for a negative eigenvalue.
  static Density3 from_matrix(const Matrix3c& m);

  /// Diagonal state diag(x1, x2, x3); the entries must already form a
  /// probability vector.
  static Density3 diagonal(double x1, double x2, double x3);

  const Matrix3c& matrix() const { return m_; }

 private:
  explicit Density3(const Matrix3c& m) : m_(m) {}
  friend Density3 from_bloch(const Vec8& n, double tol);
  friend Density3 conjugate(const Density3& rho, const Matrix3c& u);

  Matrix3c m_;
};

/// Eigenvalues x1 >= x2 >= x3.
struct Spectrum3 {
  std::array<double, 3> values;

  double sum() const { return values[0] + values[1] + values[2]; }
};

/// Coefficients of rho^3 - c1 rho^2 + c2 rho - c3 I = 0.
struct CharPolyCoeffs {
  double c1;  ///< trace
  double c2;  ///< x1x2 + x2x3 + x1x3
  double c3;  ///< determinant
};

/// (1/3)(I + sqrt(3) n.lambda) as a plain matrix; no validity check.
Matrix3c bloch_matrix(const Vec8& n);

/// rho = (1/3)(I + sqrt(3) n.lambda). Throws StateError naming the violated
/// constraint ("norm_sq" or "cubic") and its value if n is not a state.
Density3 from_bloch(const Vec8& n, double tol = kDefaultTol);

/// n_j = (sqrt(3)/2) Tr(rho lambda_j).
Vec8 to_bloch(const Density3& rho);

/// Same map on an unvalidated matrix (used by predicates and the CLI).
Vec8 to_bloch(const Matrix3c& m);

/// U rho U^dagger for a unitary U. The caller vouches for unitarity.
Density3 conjugate(const Density3& rho, const Matrix3c& u);

Spectrum3 spectrum(const Density3& rho);
CharPolyCoeffs char_poly_coeffs(const Density3& rho);

/// -sum x log_3 x over the eigenvalues, with 0 log 0 = 0.
double entropy_of_mixing(const Density3& rho);

/// Same formula on a probability triple; entries <= 0 contribute nothing.
double entropy_from_eigenvalues(const std::array<double, 3>& x);

}  // namespace qutrit
