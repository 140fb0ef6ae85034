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

#include <cstdint>
#include <vector>

#include "qutrit/bloch.hpp"
#include "qutrit/random.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kOrthogonalityTol = 1e-10;

using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Matrix3 = Eigen::Matrix3d;

/// Element of SU(3).
class Unitary3 {
 public:
  /// Throws ValidationError unless U^dagger U = I and det U = 1 within 1e-12.
  static Unitary3 from_matrix(const Matrix3c& m);
  static Unitary3 identity() { return Unitary3(Matrix3c::Identity()); }

  const Matrix3c& matrix() const { return m_; }
  Unitary3 operator*(const Unitary3& o) const { return Unitary3(m_ * o.m_); }

 private:
  explicit Unitary3(const Matrix3c& m) : m_(m) {}
  friend Unitary3 haar_random_su3(Rng& rng);

  Matrix3c m_;
};

/// Element of SU(2).
class Unitary2 {
 public:
  static Unitary2 from_matrix(const Matrix2c& m);
  static Unitary2 identity() { return Unitary2(Matrix2c::Identity()); }

  const Matrix2c& matrix() const { return m_; }
  Unitary2 operator*(const Unitary2& o) const { return Unitary2(m_ * o.m_); }

 private:
  explicit Unitary2(const Matrix2c& m) : m_(m) {}
  friend Unitary2 haar_random_su2(Rng& rng);

  Matrix2c m_;
};

/// Ad(U) for U in SU(3): a rotation of Bloch 8-space.
class Adjoint8 {
 public:
  /// Throws ValidationError unless A^T A = I and det A = +1 within 1e-10.
  static Adjoint8 from_matrix(const Matrix8& m);

  const Matrix8& matrix() const { return m_; }
  Vec8 apply(const Vec8& n) const;

 private:
  explicit Adjoint8(const Matrix8& m) : m_(m) {}
  friend Adjoint8 adjoint_su3(const Unitary3& u);

  Matrix8 m_;
};

/// Ad(U) for U in SU(2): a rotation of the Poincare sphere.
class Adjoint3 {
 public:
  static Adjoint3 from_matrix(const Matrix3& m);

  const Matrix3& matrix() const { return m_; }
  Eigen::Vector3d apply(const Eigen::Vector3d& v) const { return m_ * v; }

 private:
  explicit Adjoint3(const Matrix3& m) : m_(m) {}
  friend Adjoint3 adjoint_su2(const Unitary2& u);

  Matrix3 m_;
};

/// Ad(U)_ij = (1/2) Tr(lambda_i U lambda_j U^dagger), evaluated densely.
Adjoint8 adjoint_su3(const Unitary3& u);

/// Ad(U)_ij = (1/2) Tr(sigma_i U sigma_j U^dagger).
Adjoint3 adjoint_su2(const Unitary2& u);

/// Pauli matrix sigma_i, i in 1..3.
const Matrix2c& pauli(int i);

/// Haar-distributed SU(3) element. A complex Ginibre matrix is
/// orthonormalized column by column (Gram-Schmidt, which leaves R with a
/// positive real diagonal) and the result divided by a cube root of its
/// determinant.
Unitary3 haar_random_su3(Rng& rng);
Unitary3 haar_random_su3(std::uint64_t seed);

Unitary2 haar_random_su2(Rng& rng);
Unitary2 haar_random_su2(std::uint64_t seed);

/// Ad(U_i) n for `count` Haar-random U_i drawn from one generator seeded with
/// `seed`. Throws StateError if n is not a state.
std::vector<Vec8> orbit_sample(const Vec8& n, int count, std::uint64_t seed,
                               double tol = kDefaultTol);

}  // namespace qutrit
