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
#include <span>
#include <vector>

#include "qutrit/types.hpp"

namespace qutrit::gellmann {

/// One nonzero entry of a rank-3 structure tensor. Indices are 1-based.
struct TensorEntry {
  std::array<int, 3> index;
  double value;
};

/// The f (antisymmetric) and d (symmetric) tensors of su(3).
///
/// The ground truth is the short list of independent entries exactly as
/// tabulated in the literature (index order included). On construction each
/// entry is brought to sorted-index form, carrying the permutation sign for
/// f, and then expanded over all index permutations for fast contraction.
class StructureTensors {
 public:
  static const StructureTensors& instance();

  /// Independent entries, sorted indices j <= k <= l.
  std::span<const TensorEntry> canonical_f() const { return canonical_f_; }
  std::span<const TensorEntry> canonical_d() const { return canonical_d_; }

  /// Every nonzero (j,k,l) with its value; all permutations present.
  std::span<const TensorEntry> expanded_f() const { return expanded_f_; }
  std::span<const TensorEntry> expanded_d() const { return expanded_d_; }

  double f(int j, int k, int l) const;
  double d(int j, int k, int l) const;

 private:
  StructureTensors();

  std::vector<TensorEntry> canonical_f_;
  std::vector<TensorEntry> canonical_d_;
  std::vector<TensorEntry> expanded_f_;
  std::vector<TensorEntry> expanded_d_;
};

/// The Gell-Mann matrix lambda_i, i in 1..8. Throws std::out_of_range.
const Matrix3c& lambda(int i);

/// All eight matrices, lambda_1 first.
const std::array<Matrix3c, 8>& basis();

/// Totally antisymmetric structure constant f_jkl (1-based indices).
double f_symbol(int j, int k, int l);

/// Totally symmetric tensor d_jkl (1-based indices).
double d_symbol(int j, int k, int l);

/// lambda_j lambda_k rebuilt from the tensors:
/// (2/3) delta_jk I + sum_l (d_jkl + i f_jkl) lambda_l.
Matrix3c product_expansion(int j, int k);

}  // namespace qutrit::gellmann
