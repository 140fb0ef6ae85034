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
#include <initializer_list>

#include "qutrit/types.hpp"

namespace qutrit {

/// Real 8-vector in the Gell-Mann basis (Bloch / coherence vector).
///
/// Components are finite; no normalization is implied. Element access with
/// operator[] is 0-based, so n[0] is the coefficient of lambda_1.
class Vec8 {
 public:
  using Storage = std::array<double, 8>;

  Vec8() : c_{} {}
  explicit Vec8(const Storage& components);
  Vec8(std::initializer_list<double> components);

  /// The unit vector e_k, k in 1..8.
  static Vec8 basis_vector(int k);

  double operator[](std::size_t i) const { return c_[i]; }
  const Storage& components() const { return c_; }

  Vec8& operator+=(const Vec8& o);
  Vec8& operator-=(const Vec8& o);
  Vec8& operator*=(double s);

  friend Vec8 operator+(Vec8 a, const Vec8& b) { return a += b; }
  friend Vec8 operator-(Vec8 a, const Vec8& b) { return a -= b; }
  friend Vec8 operator*(double s, Vec8 a) { return a *= s; }
  friend Vec8 operator*(Vec8 a, double s) { return a *= s; }
  friend bool operator==(const Vec8&, const Vec8&) = default;

 private:
  Storage c_;
};

double dot(const Vec8& a, const Vec8& b);
double norm_squared(const Vec8& a);
double max_abs_diff(const Vec8& a, const Vec8& b);

/// (a ^ b)_j = sqrt(3) sum_kl f_jkl a_k b_l
Vec8 wedge(const Vec8& a, const Vec8& b);

/// (a * b)_j = sqrt(3) sum_kl d_jkl a_k b_l
Vec8 star(const Vec8& a, const Vec8& b);

/// The two quantities bounding the state body:
///   norm_sq = |n|^2
///   cubic   = 3|n|^2 - 2 n.(n*n)
/// n is a density matrix iff both lie in [0, 1].
struct MixedStateConstraints {
  double norm_sq;
  double cubic;
};

MixedStateConstraints mixed_state_constraints(const Vec8& n);

/// |n|^2 = 1 and n*n = n, each within tol.
bool is_pure(const Vec8& n, double tol = kDefaultTol);

/// Both mixed-state constraints within [-tol, 1 + tol].
bool is_mixed_state(const Vec8& n, double tol = kDefaultTol);

/// Angle arccos(n.m) between two pure-state Bloch vectors, in radians
/// (always in [0, pi]).
/// Throws StateError naming the argument that is not pure.
double geodesic_distance(const Vec8& n, const Vec8& m, double tol = kDefaultTol);

/// Pure states diag(1,0,0), diag(0,1,0), diag(0,0,1).
namespace vertices {
Vec8 red();
Vec8 blue();
Vec8 green();
}  // namespace vertices

}  // namespace qutrit
