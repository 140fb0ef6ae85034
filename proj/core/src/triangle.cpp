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

#include "qutrit/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace qutrit {
namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

double cross2(const DiagPoint& o, const DiagPoint& a, const DiagPoint& b) {
  return (a.n3 - o.n3) * (b.n8 - o.n8) - (a.n8 - o.n8) * (b.n3 - o.n3);
}

// Euclidean projection onto {x >= 0, sum x = 1}.
std::array<double, 3> project_to_simplex(const std::array<double, 3>& x) {
  std::array<double, 3> s = x;
  std::sort(s.begin(), s.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (int k = 0; k < 3; ++k) {
    cumulative += s[static_cast<std::size_t>(k)];
    const double t = (cumulative - 1.0) / (k + 1);
    if (s[static_cast<std::size_t>(k)] - t > 0.0) theta = t;
  }
  return {std::max(x[0] - theta, 0.0), std::max(x[1] - theta, 0.0), std::max(x[2] - theta, 0.0)};
}

}  // namespace

Vec8 to_vec8(const DiagPoint& p) { return Vec8{0, 0, p.n3, 0, 0, 0, 0, p.n8}; }

std::array<double, 3> diagonal_eigenvalues(const DiagPoint& p) {
  return {(1.0 + kSqrt3 * p.n3 + p.n8) / 3.0, (1.0 - kSqrt3 * p.n3 + p.n8) / 3.0,
          (1.0 - 2.0 * p.n8) / 3.0};
}

double diagonal_entropy(const DiagPoint& p) { return entropy_from_eigenvalues(diagonal_eigenvalues(p)); }

DiagConstraints diag_constraints(const DiagPoint& p) {
  const double a = p.n3 * p.n3;
  const double b = p.n8;
  return {a + b * b, 2.0 * b * b * b - 6.0 * a * b + 3.0 * a + 3.0 * b * b};
}

bool in_triangle(const DiagPoint& p, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("in_triangle: tol must be non-negative");
  const auto q = diag_constraints(p);
  auto inside = [tol](double v) { return v >= -tol && v <= 1.0 + tol; };
  return inside(q.q1) && inside(q.q2);
}

std::array<double, 3> TriangleRegion::barycentric(const DiagPoint& p) {
  const DiagPoint r = red(), b = blue(), g = green();
  const double area = cross2(r, b, g);
  return {cross2(p, b, g) / area, cross2(r, p, g) / area, cross2(r, b, p) / area};
}

bool TriangleRegion::contains(const DiagPoint& p, double tol) {
  const auto w = barycentric(p);
  return std::all_of(w.begin(), w.end(), [tol](double v) { return v >= -tol; });
}

DiagPoint TriangleRegion::project(const DiagPoint& p) {
  // The eigenvalue map is a similarity onto the probability simplex, so the
  // nearest simplex point maps back to the nearest triangle point.
  const auto x = project_to_simplex(diagonal_eigenvalues(p));
  return {0.5 * kSqrt3 * (x[0] - x[1]), 0.5 * (1.0 - 3.0 * x[2])};
}

std::vector<NamedPoint> named_points() {
  const double h = kSqrt3 / 2.0;
  const double q = kSqrt3 / 4.0;
  return {
      {"R", {h, 0.5}, Density3::diagonal(1.0, 0.0, 0.0)},
      {"B", {-h, 0.5}, Density3::diagonal(0.0, 1.0, 0.0)},
      {"G", {0.0, -1.0}, Density3::diagonal(0.0, 0.0, 1.0)},
      {"M_RB", {0.0, 0.5}, Density3::diagonal(0.5, 0.5, 0.0)},
      {"M_RG", {q, -0.25}, Density3::diagonal(0.5, 0.0, 0.5)},
      {"M_BG", {-q, -0.25}, Density3::diagonal(0.0, 0.5, 0.5)},
      {"O", {0.0, 0.0}, Density3::diagonal(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)},
  };
}

NamedPoint named_point(const std::string& label) {
  for (auto& p : named_points()) {
    if (p.label == label) return p;
  }
  throw std::out_of_range("unknown named point '" + label + "'");
}

double grid_n3(int i, int resolution) {
  return TriangleRegion::kHalfRoot3 * static_cast<double>(2 * i - (resolution - 1)) /
         static_cast<double>(resolution - 1);
}

double grid_n8(int j, int resolution) {
  return TriangleRegion::kMinN8 +
         (TriangleRegion::kMaxN8 - TriangleRegion::kMinN8) * static_cast<double>(j) /
             static_cast<double>(resolution - 1);
}

EntropyGrid entropy_grid(int resolution, double tol) {
  if (resolution < 2) throw std::invalid_argument("entropy_grid: resolution must be at least 2");
  EntropyGrid grid;
  grid.resolution = resolution;
  grid.n3_axis.resize(static_cast<std::size_t>(resolution));
  grid.n8_axis.resize(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    grid.n3_axis[static_cast<std::size_t>(i)] = grid_n3(i, resolution);
    grid.n8_axis[static_cast<std::size_t>(i)] = grid_n8(i, resolution);
  }
  grid.samples.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (double n8 : grid.n8_axis) {
    for (double n3 : grid.n3_axis) {
      const DiagPoint p{n3, n8};
      GridSample s{p, diag_constraints(p), in_triangle(p, tol), std::nullopt};
      if (s.in_region) s.entropy = diagonal_entropy(p);
      grid.samples.push_back(s);
    }
  }
  return grid;
}

}  // namespace qutrit
