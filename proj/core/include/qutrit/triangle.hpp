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
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qutrit/bloch.hpp"
#include "qutrit/density.hpp"

namespace qutrit {

/// A diagonal state's coordinates (n3, n8) in the lambda_3/lambda_8 plane.
struct DiagPoint {
  double n3 = 0.0;
  double n8 = 0.0;

  friend bool operator==(const DiagPoint&, const DiagPoint&) = default;
};

Vec8 to_vec8(const DiagPoint& p);

/// The diagonal entries of rho(p), in matrix order (not sorted):
/// ((1 + sqrt3 n3 + n8)/3, (1 - sqrt3 n3 + n8)/3, (1 - 2 n8)/3).
std::array<double, 3> diagonal_eigenvalues(const DiagPoint& p);

/// Entropy of mixing of rho(p) from the closed-form diagonal entries.
double diagonal_entropy(const DiagPoint& p);

/// The polynomial constraints restricted to the plane:
///   q1 = n3^2 + n8^2
///   q2 = 2 n8^3 - 6 n3^2 n8 + 3 n3^2 + 3 n8^2
struct DiagConstraints {
  double q1;
  double q2;
};

DiagConstraints diag_constraints(const DiagPoint& p);

/// q1 and q2 both in [-tol, 1 + tol].
bool in_triangle(const DiagPoint& p, double tol = kDefaultTol);

/// The equilateral triangle of diagonal states, vertices R, B, G.
struct TriangleRegion {
  static constexpr double kHalfRoot3 = std::numbers::sqrt3 / 2.0;

  static DiagPoint red() { return {kHalfRoot3, 0.5}; }
  static DiagPoint blue() { return {-kHalfRoot3, 0.5}; }
  static DiagPoint green() { return {0.0, -1.0}; }

  /// Axis-aligned box [-sqrt3/2, sqrt3/2] x [-1, 1/2].
  static constexpr double kMinN3 = -kHalfRoot3;
  static constexpr double kMaxN3 = kHalfRoot3;
  static constexpr double kMinN8 = -1.0;
  static constexpr double kMaxN8 = 0.5;

  /// Barycentric weights of p with respect to (R, B, G), computed from the
  /// vertex geometry alone.
  static std::array<double, 3> barycentric(const DiagPoint& p);

  static bool contains(const DiagPoint& p, double tol = kDefaultTol);

  /// Nearest point of the closed triangle.
  static DiagPoint project(const DiagPoint& p);
};

/// A labeled point of the diagonal plane together with its density matrix.
struct NamedPoint {
  std::string label;
  DiagPoint point;
  Density3 rho;
};

/// Vertices R, B, G; edge midpoints M_RB, M_RG, M_BG; origin O.
std::vector<NamedPoint> named_points();

/// Lookup by label; throws std::out_of_range for unknown labels.
NamedPoint named_point(const std::string& label);

struct GridSample {
  DiagPoint point;
  DiagConstraints q;
  bool in_region;
  std::optional<double> entropy;  ///< empty outside the triangle
};

/// Uniform resolution x resolution sampling of the bounding box.
struct EntropyGrid {
  int resolution = 0;
  std::vector<double> n3_axis;
  std::vector<double> n8_axis;
  std::vector<GridSample> samples;  ///< row-major, n8 ascending, n3 ascending within a row

  const GridSample& at(int i3, int i8) const {
    return samples[static_cast<std::size_t>(i8) * static_cast<std::size_t>(resolution) +
                   static_cast<std::size_t>(i3)];
  }
};

/// Axis values i = 0..resolution-1, symmetric about zero in n3.
double grid_n3(int i, int resolution);
double grid_n8(int j, int resolution);

/// Throws std::invalid_argument if resolution < 2.
EntropyGrid entropy_grid(int resolution, double tol = kDefaultTol);

}  // namespace qutrit
