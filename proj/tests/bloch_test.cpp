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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qutrit/gellmann.hpp"
#include "test_support.hpp"

namespace qutrit {
namespace {

using testing::contraction_oracle;
using testing::d_trace_oracle;
using testing::f_trace_oracle;
using testing::Generator;

const double kR3 = std::sqrt(3.0);

Matrix3c dot_lambda(const Vec8& a) {
  Matrix3c m = Matrix3c::Zero();
  for (int k = 1; k <= 8; ++k) m += a[k - 1] * gellmann::lambda(k);
  return m;
}

TEST(Vec8, RejectsNonFinite) {
  EXPECT_THROW((Vec8{0, 0, 0, 0, 0, 0, 0, NAN}), std::invalid_argument);
  EXPECT_THROW((Vec8{0, INFINITY, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW((Vec8{0, 0, 0}), std::invalid_argument);
}

TEST(Dot, Examples) {
  EXPECT_EQ(dot(Vec8::basis_vector(3), Vec8::basis_vector(3)), 1.0);
  EXPECT_NEAR(dot(vertices::red(), vertices::blue()), -0.5, 1e-15);
  Generator gen(1);
  for (int i = 0; i < 100; ++i) {
    const Vec8 a = gen.in_ball(2.0), b = gen.in_ball(2.0);
    EXPECT_EQ(dot(a, b), dot(b, a));
  }
}

TEST(Wedge, Examples) {
  Generator gen(2);
  const Vec8 a = gen.in_ball(1.0);
  EXPECT_LE(max_abs_diff(wedge(a, a), Vec8{}), 1e-15);

  // Contraction oracle: only f_{312} contributes, giving sqrt3 e3.
  const Vec8 e12 = wedge(Vec8::basis_vector(1), Vec8::basis_vector(2));
  const Vec8 oracle = contraction_oracle(f_trace_oracle, Vec8::basis_vector(1), Vec8::basis_vector(2));
  EXPECT_LE(max_abs_diff(oracle, kR3 * Vec8::basis_vector(3)), 1e-14);
  EXPECT_LE(max_abs_diff(e12, oracle), 1e-14);

  for (int i = 0; i < 50; ++i) {
    const Vec8 x = gen.in_ball(1.5), y = gen.in_ball(1.5);
    EXPECT_LE(max_abs_diff(wedge(x, y), -1.0 * wedge(y, x)), 1e-15);
  }
}

TEST(Wedge, MatchesCommutator) {
  // [a.l, b.l] = (2i/sqrt3) (a ^ b).l
  Generator gen(3);
  for (int i = 0; i < 200; ++i) {
    const Vec8 a = gen.in_ball(1.0), b = gen.in_ball(1.0);
    const Matrix3c A = dot_lambda(a), B = dot_lambda(b);
    const Matrix3c lhs = A * B - B * A;
    const Matrix3c rhs = Complex{0.0, 2.0 / kR3} * dot_lambda(wedge(a, b));
    EXPECT_LE(testing::max_abs(lhs - rhs), 1e-13);
  }
}

TEST(Star, Examples) {
  const Vec8 r = vertices::red();
  EXPECT_LE(max_abs_diff(star(r, r), r), 1e-15);

  // Contraction oracle on basis vectors: (e3 * e8)_3 = sqrt3 d_338 = 1.
  const Vec8 e3 = Vec8::basis_vector(3), e8 = Vec8::basis_vector(8);
  const Vec8 oracle = contraction_oracle(d_trace_oracle, e3, e8);
  EXPECT_LE(max_abs_diff(oracle, e3), 1e-14);
  EXPECT_LE(max_abs_diff(star(e3, e8), e3), 1e-15);

  Generator gen(4);
  for (int i = 0; i < 50; ++i) {
    const Vec8 x = gen.in_ball(1.5), y = gen.in_ball(1.5);
    EXPECT_LE(max_abs_diff(star(x, y), star(y, x)), 1e-15);
  }
}

TEST(Star, MatchesTensorOracleAndAnticommutator) {
  // {a.l, b.l} = (4/3)(a.b) I + (2/sqrt3)(a * b).l
  Generator gen(5);
  for (int i = 0; i < 50; ++i) {
    const Vec8 a = gen.in_ball(1.0), b = gen.in_ball(1.0);
    EXPECT_LE(max_abs_diff(star(a, b), contraction_oracle(d_trace_oracle, a, b)), 1e-13);
    EXPECT_LE(max_abs_diff(wedge(a, b), contraction_oracle(f_trace_oracle, a, b)), 1e-13);
    const Matrix3c A = dot_lambda(a), B = dot_lambda(b);
    const Matrix3c rhs = (4.0 / 3.0) * dot(a, b) * Matrix3c::Identity() + (2.0 / kR3) * dot_lambda(star(a, b));
    EXPECT_LE(testing::max_abs(A * B + B * A - rhs), 1e-13);
  }
}

TEST(Products, Bilinearity) {
  Generator gen(6);
  for (int i = 0; i < 200; ++i) {
    const Vec8 a = gen.in_ball(1.0), b = gen.in_ball(1.0), c = gen.in_ball(1.0);
    const double s = gen.uniform(-2.0, 2.0), t = gen.uniform(-2.0, 2.0);
    const Vec8 mix = s * a + t * b;
    EXPECT_LE(max_abs_diff(star(mix, c), s * star(a, c) + t * star(b, c)), 1e-12);
    EXPECT_LE(max_abs_diff(star(c, mix), s * star(c, a) + t * star(c, b)), 1e-12);
    EXPECT_LE(max_abs_diff(wedge(mix, c), s * wedge(a, c) + t * wedge(b, c)), 1e-12);
    EXPECT_LE(max_abs_diff(wedge(c, mix), s * wedge(c, a) + t * wedge(c, b)), 1e-12);
  }
}

TEST(Products, CubicInvariantTwoWays) {
  // a.(a*a) against the fully expanded sqrt3 sum d_jkl a_j a_k a_l.
  Generator gen(7);
  for (int i = 0; i < 100; ++i) {
    const Vec8 a = gen.in_ball(1.2);
    double triple = 0.0;
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= 8; ++l) triple += gellmann::d_symbol(j, k, l) * a[j - 1] * a[k - 1] * a[l - 1];
    EXPECT_NEAR(dot(a, star(a, a)), kR3 * triple, 1e-12);
    EXPECT_NEAR(dot(star(a, a), a), dot(a, star(a, a)), 1e-12);
  }
}

TEST(IsPure, Examples) {
  EXPECT_TRUE(is_pure(vertices::red()));
  EXPECT_TRUE(is_pure(vertices::blue()));
  EXPECT_TRUE(is_pure(vertices::green()));
  EXPECT_FALSE(is_pure(Vec8{}));
  EXPECT_FALSE(is_pure(Vec8::basis_vector(8)));
  EXPECT_LE(max_abs_diff(star(Vec8::basis_vector(8), Vec8::basis_vector(8)), -1.0 * Vec8::basis_vector(8)),
            1e-15);
  EXPECT_THROW(is_pure(Vec8{}, 0.0), std::invalid_argument);
}

TEST(IsPure, AgreesWithIdempotence) {
  Generator gen(8);
  int disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    Vec8 n;
    switch (i % 3) {
      case 0: n = gen.pure(); break;
      case 1: n = gen.pure() + 1e-4 * gen.in_ball(1.0); break;
      default: n = gen.in_ball(1.2); break;
    }
    const Matrix3c rho = testing::rho_oracle(n);
    const bool idempotent = testing::max_abs(rho * rho - rho) <= 1e-10;
    disagreements += is_pure(n) != idempotent;
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(IsMixedState, Examples) {
  EXPECT_TRUE(is_mixed_state(Vec8{}));
  EXPECT_TRUE(is_mixed_state(vertices::red()));
  EXPECT_FALSE(is_mixed_state(1.2 * vertices::red()));
  EXPECT_THROW(is_mixed_state(Vec8{}, -1.0), std::invalid_argument);
}

TEST(IsMixedState, AgreesWithEigenvaluePositivity) {
  Generator gen(9);
  int checked = 0, valid = 0;
  for (int i = 0; i < 10000; ++i) {
    Vec8 n = i % 2 == 0 ? gen.in_ball(1.1) : gen.uniform(0.0, 1.05) * gen.pure();
    const double lowest = testing::eig_oracle(testing::rho_oracle(n))(2);
    if (is_mixed_state(n)) {
      ++valid;
      EXPECT_GE(lowest, -1e-10);
    } else {
      EXPECT_TRUE(lowest < -kDefaultTol || norm_squared(n) > 1.0) << "lowest=" << lowest;
    }
    ++checked;
  }
  EXPECT_EQ(checked, 10000);
  // Both sides of the boundary are represented.
  EXPECT_GT(valid, 1000);
  EXPECT_LT(valid, 9000);
}

TEST(Geodesic, VertexDistances) {
  const double third = 2.0 * std::numbers::pi / 3.0;
  EXPECT_NEAR(geodesic_distance(vertices::red(), vertices::blue()), third, 1e-12);
  EXPECT_NEAR(geodesic_distance(vertices::red(), vertices::green()), third, 1e-12);
  EXPECT_EQ(geodesic_distance(vertices::red(), vertices::red()), 0.0);
  testing::Generator gen(10);
  for (int i = 0; i < 100; ++i) {
    const Vec8 a = gen.pure(), b = gen.pure();
    EXPECT_NEAR(geodesic_distance(a, b), std::acos(dot(a, b)), 1e-7);
  }
}

TEST(Geodesic, NamesTheOffendingArgument) {
  try {
    geodesic_distance(vertices::red(), Vec8{});
    FAIL() << "expected StateError";
  } catch (const StateError& e) {
    EXPECT_NE(std::string(e.what()).find("second"), std::string::npos);
  }
  try {
    geodesic_distance(0.5 * vertices::red(), vertices::red());
    FAIL() << "expected StateError";
  } catch (const StateError& e) {
    EXPECT_NE(std::string(e.what()).find("first"), std::string::npos);
  }
}

}  // namespace
}  // namespace qutrit
