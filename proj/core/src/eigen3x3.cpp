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

#include "qutrit/eigen3x3.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace qutrit {
namespace {

using Vec3c = Eigen::Vector3cd;

Matrix3c hermitian_part(const Matrix3c& a) {
  Matrix3c h;
  for (int i = 0; i < 3; ++i) {
    h(i, i) = a(i, i).real();
    for (int j = i + 1; j < 3; ++j) {
      h(i, j) = a(i, j);
      h(j, i) = std::conj(a(i, j));
    }
  }
  return h;
}

// Bilinear cross product; (r . (r x s)) = 0 without conjugation.
Vec3c cross(const Vec3c& r, const Vec3c& s) {
  return Vec3c(r(1) * s(2) - r(2) * s(1), r(2) * s(0) - r(0) * s(2), r(0) * s(1) - r(1) * s(0));
}

std::array<double, 3> cardano(const Matrix3c& h) {
  const double q = h.trace().real() / 3.0;
  Matrix3c b = h;
  b.diagonal().array() -= q;
  const double p2 = b.squaredNorm() / 6.0;
  if (p2 == 0.0) return {q, q, q};
  const double p = std::sqrt(p2);
  const double r = std::clamp((b / p).determinant().real() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  return {e1, e2, e3};
}

}  // namespace

std::array<double, 3> hermitian_eigenvalues(const Matrix3c& a) {
  const Matrix3c h = hermitian_part(a);
  const auto approx = cardano(h);

  // Deflate on whichever end of the spectrum is better separated.
  const double gap_top = approx[0] - approx[1];
  const double gap_bottom = approx[1] - approx[2];
  const double isolated = gap_top >= gap_bottom ? approx[0] : approx[2];
  const double scale = h.norm();
  if (scale == 0.0 || std::max(gap_top, gap_bottom) <= 1e-3 * scale) return approx;

  Matrix3c shifted = h;
  shifted.diagonal().array() -= isolated;
  Vec3c v = Vec3c::Zero();
  double best = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Vec3c c = cross(shifted.row(i).transpose(), shifted.row(j).transpose());
      const double n = c.squaredNorm();
      if (n > best) {
        best = n;
        v = c;
      }
    }
  }
  if (best == 0.0) return approx;
  v.normalize();

  // Orthonormal complement {u1, u2} of v.
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(v(i)) < std::abs(v(k))) k = i;
  }
  Vec3c u1 = Vec3c::Unit(k);
  u1 -= v.dot(u1) * v;
  u1.normalize();
  Vec3c u2 = cross(v, u1).conjugate();
  u2.normalize();

  const double top = v.dot(h * v).real();
  const double h11 = u1.dot(h * u1).real();
  const double h22 = u2.dot(h * u2).real();
  const Complex h12 = u1.dot(h * u2);
  const double mean = 0.5 * (h11 + h22);
  const double radius = std::hypot(0.5 * (h11 - h22), std::abs(h12));

  std::array<double, 3> out{top, mean + radius, mean - radius};
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace qutrit
