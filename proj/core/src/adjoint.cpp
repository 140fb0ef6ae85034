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

#include "qutrit/adjoint.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qutrit/gellmann.hpp"

namespace qutrit {
namespace {

template <typename M>
void check_special_unitary(const M& m, const char* group) {
  const double unit_err = (m.adjoint() * m - M::Identity()).cwiseAbs().maxCoeff();
  const double det_err = std::abs(m.determinant() - Complex{1.0, 0.0});
  if (!(unit_err <= kUnitarityTol) || !(det_err <= kUnitarityTol)) {
    std::ostringstream msg;
    msg << "matrix is not in " << group << " (|U^dagger U - I| = " << unit_err
        << ", |det U - 1| = " << det_err << ")";
    throw ValidationError(msg.str());
  }
}

template <typename M>
void check_special_orthogonal(const M& m, const char* group) {
  const double orth_err = (m.transpose() * m - M::Identity()).cwiseAbs().maxCoeff();
  const double det_err = std::abs(m.determinant() - 1.0);
  if (!(orth_err <= kOrthogonalityTol) || !(det_err <= kOrthogonalityTol)) {
    std::ostringstream msg;
    msg << "matrix is not in " << group << " (|A^T A - I| = " << orth_err
        << ", |det A - 1| = " << det_err << ")";
    throw ValidationError(msg.str());
  }
}

// Gram-Schmidt on the columns of a complex Gaussian matrix, two passes for
// orthogonality at machine precision, then fix the determinant phase.
template <int N>
Eigen::Matrix<Complex, N, N> haar_special_unitary(Rng& rng) {
  using Mat = Eigen::Matrix<Complex, N, N>;
  Mat g;
  for (int c = 0; c < N; ++c) {
    for (int r = 0; r < N; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = Complex{re, im} / std::sqrt(2.0);
    }
  }
  Mat q = g;
  for (int c = 0; c < N; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int p = 0; p < c; ++p) {
        q.col(c) -= q.col(p).dot(q.col(c)) * q.col(p);
      }
    }
    q.col(c).normalize();
  }
  const double phase = std::arg(q.determinant());
  q *= std::polar(1.0, -phase / N);
  return q;
}

}  // namespace

Unitary3 Unitary3::from_matrix(const Matrix3c& m) {
  check_special_unitary(m, "SU(3)");
  return Unitary3(m);
}

Unitary2 Unitary2::from_matrix(const Matrix2c& m) {
  check_special_unitary(m, "SU(2)");
  return Unitary2(m);
}

Adjoint8 Adjoint8::from_matrix(const Matrix8& m) {
  check_special_orthogonal(m, "SO(8)");
  return Adjoint8(m);
}

Vec8 Adjoint8::apply(const Vec8& n) const {
  Vec8::Storage out{};
  for (int i = 0; i < 8; ++i) {
    double s = 0.0;
    for (int j = 0; j < 8; ++j) s += m_(i, j) * n[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return Vec8(out);
}

Adjoint3 Adjoint3::from_matrix(const Matrix3& m) {
  check_special_orthogonal(m, "SO(3)");
  return Adjoint3(m);
}

const Matrix2c& pauli(int i) {
  static const std::array<Matrix2c, 3> sigma = [] {
    const Complex j{0.0, 1.0};
    std::array<Matrix2c, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -j, j, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  if (i < 1 || i > 3) throw std::out_of_range("Pauli index outside 1..3");
  return sigma[static_cast<std::size_t>(i - 1)];
}

Adjoint8 adjoint_su3(const Unitary3& u) {
  const auto& lam = gellmann::basis();
  const Matrix3c& um = u.matrix();
  std::array<Matrix3c, 8> rotated;
  for (std::size_t j = 0; j < 8; ++j) rotated[j] = um * lam[j] * um.adjoint();
  Matrix8 a;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      a(static_cast<int>(i), static_cast<int>(j)) = 0.5 * (lam[i] * rotated[j]).trace().real();
    }
  }
  return Adjoint8(a);
}

Adjoint3 adjoint_su2(const Unitary2& u) {
  const Matrix2c& um = u.matrix();
  Matrix3 a;
  for (int j = 1; j <= 3; ++j) {
    const Matrix2c rotated = um * pauli(j) * um.adjoint();
    for (int i = 1; i <= 3; ++i) a(i - 1, j - 1) = 0.5 * (pauli(i) * rotated).trace().real();
  }
  return Adjoint3(a);
}

Unitary3 haar_random_su3(Rng& rng) { return Unitary3(haar_special_unitary<3>(rng)); }

Unitary3 haar_random_su3(std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_su3(rng);
}

Unitary2 haar_random_su2(Rng& rng) { return Unitary2(haar_special_unitary<2>(rng)); }

Unitary2 haar_random_su2(std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_su2(rng);
}

std::vector<Vec8> orbit_sample(const Vec8& n, int count, std::uint64_t seed, double tol) {
  if (count < 0) throw std::invalid_argument("orbit_sample: count must be non-negative");
  if (!is_mixed_state(n, tol)) {
    const auto q = mixed_state_constraints(n);
    const bool norm_bad = q.norm_sq > 1.0 + tol;
    std::ostringstream msg;
    msg << "orbit_sample: seed vector is not a state ("
        << (norm_bad ? "norm_sq = " : "cubic = ") << (norm_bad ? q.norm_sq : q.cubic) << ")";
    throw StateError(norm_bad ? "norm_sq" : "cubic", norm_bad ? q.norm_sq : q.cubic, msg.str());
  }
  Rng rng(seed);
  std::vector<Vec8> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(adjoint_su3(haar_random_su3(rng)).apply(n));
  return out;
}

}  // namespace qutrit
