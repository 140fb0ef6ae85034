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

#include "qutrit/types.hpp"

namespace qutrit {

/// Eigenvalues of a 3x3 Hermitian matrix, descending.
///
/// Closed-form trigonometric solution of the characteristic cubic, followed
/// by one deflation step: the best-separated root's eigenvector is built from
/// row cross products and the remaining pair comes from the projected 2x2
/// block. The deflation keeps near-degenerate pairs (pure states) accurate to
/// machine precision, which the cubic alone does not.
///
/// Only the upper triangle and the real part of the diagonal are read.
std::array<double, 3> hermitian_eigenvalues(const Matrix3c& a);

}  // namespace qutrit
