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

#include <stdexcept>
#include <vector>

#include "qutrit/triangle.hpp"

namespace qutrit {

/// Raised when a requested level is not crossed anywhere on the grid.
class ContourError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Polyline {
  std::vector<DiagPoint> points;
  bool closed = false;  ///< last point connects back to the first
};

/// Level set {p in triangle : E(rho(p)) = level} by marching squares over a
/// resolution x resolution grid on the bounding box.
///
/// Outside the triangle the field is continued by the entropy of the nearest
/// triangle point, so curves that reach an edge are carried to it rather than
/// stopping a cell short. Each edge crossing starts from linear interpolation
/// and is then polished by bracketed root finding along the cell edge; points
/// beyond the triangle are pulled back onto it. Every returned point satisfies
/// |E - level| <= tol or ContourError is thrown.
///
/// Throws std::invalid_argument for level outside (0, 1) or resolution < 2,
/// ContourError when the grid never crosses the level.
std::vector<Polyline> equi_entropy_contour(double level, double tol, int resolution = 200);

}  // namespace qutrit
