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

#include "qutrit/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qutrit/eigen3x3.hpp"
#include "qutrit/gellmann.hpp"

namespace qutrit {

Density3 Density3::from_matrix(const Matrix3c& m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermiticityTol) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (max |m - m^dagger| = " << herm << ")";
    throw ValidationError(msg.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
    std::ostringstream msg;
    msg << "trace is " << tr.real() << (tr.imag() < 0 ? "-" : "+") << std::abs(tr.imag())
        << "i, expected 1";
    throw ValidationError(msg.str());
  }
  const double lowest = hermitian_eigenvalues(m)[2];
  if (lowest < -kPositivityTol) {
    std::ostringstream msg;
    msg << "matrix is not positive semidefinite (lowest eigenvalue " << lowest << ")";
    throw StateError("positivity", lowest, msg.str());
  }
  return Density3(m);
}

Density3 Density3::diagonal(double x1, double x2, double x3) {
  Matrix3c m = Matrix3c::Zero();
  m(0, 0) = x1;
  m(1, 1) = x2;
  m(2, 2) = x3;
  return from_matrix(m);
}

Matrix3c bloch_matrix(const Vec8& n) {
  const auto& lam = gellmann::basis();
  Matrix3c m = Matrix3c::Zero();
  for (std::size_t k = 0; k < 8; ++k) m += n[k] * lam[k];
  m *= std::numbers::sqrt3;
  m.diagonal().array() += 1.0;
  return m / 3.0;
}

Density3 from_bloch(const Vec8& n, double tol) {
  const auto q = mixed_state_constraints(n);
  auto fail = [](const char* name, double value, const char* bound) {
    std::ostringstream msg;
    msg << "not a density matrix: " << name << " = " << value << " " << bound;
    throw StateError(name, value, msg.str());
  };
  if (q.norm_sq > 1.0 + tol) fail("norm_sq", q.norm_sq, "exceeds 1");
  if (q.cubic > 1.0 + tol) fail("cubic", q.cubic, "exceeds 1");
  if (q.cubic < -tol) fail("cubic", q.cubic, "is negative");
  return Density3(bloch_matrix(n));
}

Vec8 to_bloch(const Matrix3c& m) {
  const auto& lam = gellmann::basis();
  Vec8::Storage c{};
  for (std::size_t k = 0; k < 8; ++k) {
    c[k] = 0.5 * std::numbers::sqrt3 * (m * lam[k]).trace().real();
  }
  return Vec8(c);
}

Vec8 to_bloch(const Density3& rho) { return to_bloch(rho.matrix()); }

Density3 conjugate(const Density3& rho, const Matrix3c& u) {
  Matrix3c m = u * rho.matrix() * u.adjoint();
  // Restore exact Hermiticity lost to rounding.
  m = 0.5 * (m + m.adjoint()).eval();
  return Density3(m);
}

Spectrum3 spectrum(const Density3& rho) { return {hermitian_eigenvalues(rho.matrix())}; }

CharPolyCoeffs char_poly_coeffs(const Density3& rho) {
  const Matrix3c& m = rho.matrix();
  const double tr = m.trace().real();
  const double tr_sq = (m * m).trace().real();
  return {tr, 0.5 * (tr * tr - tr_sq), m.determinant().real()};
}

double entropy_from_eigenvalues(const std::array<double, 3>& x) {
  double e = 0.0;
  for (double v : x) {
    if (v > 0.0) e -= v * std::log(v);
  }
  return std::max(0.0, e / std::log(3.0));
}

double entropy_of_mixing(const Density3& rho) { return entropy_from_eigenvalues(spectrum(rho).values); }

}  // namespace qutrit
