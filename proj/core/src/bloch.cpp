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

#include "qutrit/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#include "qutrit/gellmann.hpp"

namespace qutrit {
namespace {

void require_finite(const Vec8::Storage& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!std::isfinite(c[i])) {
      throw std::invalid_argument("Vec8 component " + std::to_string(i + 1) + " is not finite");
    }
  }
}

Vec8 contract(std::span<const gellmann::TensorEntry> entries, const Vec8& a, const Vec8& b) {
  Vec8::Storage out{};
  for (const auto& e : entries) {
    out[e.index[0] - 1] += e.value * a[e.index[1] - 1] * b[e.index[2] - 1];
  }
  for (auto& x : out) x *= std::numbers::sqrt3;
  return Vec8(out);
}

}  // namespace

Vec8::Vec8(const Storage& components) : c_(components) { require_finite(c_); }

Vec8::Vec8(std::initializer_list<double> components) : c_{} {
  if (components.size() != 8) {
    throw std::invalid_argument("Vec8 needs exactly 8 components, got " +
                                std::to_string(components.size()));
  }
  std::copy(components.begin(), components.end(), c_.begin());
  require_finite(c_);
}

Vec8 Vec8::basis_vector(int k) {
  if (k < 1 || k > 8) throw std::out_of_range("basis index outside 1..8");
  Storage c{};
  c[static_cast<std::size_t>(k - 1)] = 1.0;
  return Vec8(c);
}

Vec8& Vec8::operator+=(const Vec8& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Vec8& Vec8::operator-=(const Vec8& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec8& Vec8::operator*=(double s) {
  for (auto& x : c_) x *= s;
  return *this;
}

double dot(const Vec8& a, const Vec8& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

double norm_squared(const Vec8& a) { return dot(a, a); }

double max_abs_diff(const Vec8& a, const Vec8& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Vec8 wedge(const Vec8& a, const Vec8& b) {
  return contract(gellmann::StructureTensors::instance().expanded_f(), a, b);
}

Vec8 star(const Vec8& a, const Vec8& b) {
  return contract(gellmann::StructureTensors::instance().expanded_d(), a, b);
}

MixedStateConstraints mixed_state_constraints(const Vec8& n) {
  const double nn = norm_squared(n);
  return {nn, 3.0 * nn - 2.0 * dot(n, star(n, n))};
}

bool is_pure(const Vec8& n, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_pure: tol must be positive");
  if (std::abs(norm_squared(n) - 1.0) > tol) return false;
  return max_abs_diff(star(n, n), n) <= tol;
}

bool is_mixed_state(const Vec8& n, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("is_mixed_state: tol must be non-negative");
  const auto q = mixed_state_constraints(n);
  auto inside = [tol](double v) { return v >= -tol && v <= 1.0 + tol; };
  return inside(q.norm_sq) && inside(q.cubic);
}

double geodesic_distance(const Vec8& n, const Vec8& m, double tol) {
  if (!is_pure(n, tol)) {
    throw StateError("pure", norm_squared(n), "geodesic_distance: first argument is not a pure state");
  }
  if (!is_pure(m, tol)) {
    throw StateError("pure", norm_squared(m), "geodesic_distance: second argument is not a pure state");
  }
  // arccos(n.m) loses half the digits near 0 and pi; the half-angle form
  // 2 atan2(|n - m|, |n + m|) is the same angle for unit vectors and stays
  // accurate throughout.
  const Vec8 a = (1.0 / std::sqrt(norm_squared(n))) * n;
  const Vec8 b = (1.0 / std::sqrt(norm_squared(m))) * m;
  return 2.0 * std::atan2(std::sqrt(norm_squared(a - b)), std::sqrt(norm_squared(a + b)));
}

namespace vertices {

Vec8 red() { return Vec8{0, 0, std::numbers::sqrt3 / 2.0, 0, 0, 0, 0, 0.5}; }
Vec8 blue() { return Vec8{0, 0, -std::numbers::sqrt3 / 2.0, 0, 0, 0, 0, 0.5}; }
Vec8 green() { return Vec8{0, 0, 0, 0, 0, 0, 0, -1.0}; }

}  // namespace vertices
}  // namespace qutrit
