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

#include "qutrit/gellmann.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qutrit::gellmann {
namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kInvSqrt3 = std::numbers::inv_sqrt3;

void check_index(int i) {
  if (i < 1 || i > 8) {
    throw std::out_of_range("Gell-Mann index " + std::to_string(i) + " outside 1..8");
  }
}

// Independent f entries, written in the order they are usually tabulated.
std::vector<TensorEntry> f_table() {
  const double half = 0.5;
  const double root3_half = kSqrt3 / 2.0;
  return {
      {{1, 2, 3}, 1.0},
      {{4, 5, 8}, root3_half},
      {{6, 7, 8}, root3_half},
      {{1, 4, 7}, half},
      {{2, 4, 6}, half},
      {{2, 5, 7}, half},
      {{3, 4, 5}, half},
      {{5, 1, 6}, half},
      {{6, 3, 7}, half},
  };
}

std::vector<TensorEntry> d_table() {
  const double inv_root3 = kInvSqrt3;
  const double inv_2root3 = kInvSqrt3 / 2.0;
  return {
      {{1, 1, 8}, inv_root3},
      {{2, 2, 8}, inv_root3},
      {{3, 3, 8}, inv_root3},
      {{8, 8, 8}, -inv_root3},
      {{4, 4, 8}, -inv_2root3},
      {{5, 5, 8}, -inv_2root3},
      {{6, 6, 8}, -inv_2root3},
      {{7, 7, 8}, -inv_2root3},
      {{1, 4, 6}, 0.5},
      {{1, 5, 7}, 0.5},
      {{2, 4, 7}, -0.5},
      {{2, 5, 6}, 0.5},
      {{3, 4, 4}, 0.5},
      {{3, 5, 5}, 0.5},
      {{3, 6, 6}, -0.5},
      {{3, 7, 7}, -0.5},
  };
}

// Sorts the index triple in place; returns the parity of the permutation
// used (+1 even, -1 odd).
int sort_with_parity(std::array<int, 3>& idx) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i + 1 < 3 - pass; ++i) {
      if (idx[i] > idx[i + 1]) {
        std::swap(idx[i], idx[i + 1]);
        sign = -sign;
      }
    }
  }
  return sign;
}

std::vector<TensorEntry> canonicalize(const std::vector<TensorEntry>& table, bool antisymmetric) {
  std::vector<TensorEntry> out;
  out.reserve(table.size());
  for (auto e : table) {
    const int sign = sort_with_parity(e.index);
    if (antisymmetric) e.value *= sign;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [](const TensorEntry& a, const TensorEntry& b) { return a.index < b.index; });
  return out;
}

std::vector<TensorEntry> expand(const std::vector<TensorEntry>& canonical, bool antisymmetric) {
  std::vector<TensorEntry> out;
  for (const auto& e : canonical) {
    auto idx = e.index;  // sorted, so next_permutation visits each distinct ordering once
    do {
      auto probe = idx;
      const int sign = sort_with_parity(probe);
      out.push_back({idx, antisymmetric ? sign * e.value : e.value});
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return out;
}

double lookup(std::span<const TensorEntry> canonical, std::array<int, 3> idx, bool antisymmetric) {
  for (int i : idx) check_index(i);
  const int sign = sort_with_parity(idx);
  if (antisymmetric && (idx[0] == idx[1] || idx[1] == idx[2])) return 0.0;
  for (const auto& e : canonical) {
    if (e.index == idx) return antisymmetric ? sign * e.value : e.value;
  }
  return 0.0;
}

std::array<Matrix3c, 8> make_basis() {
  const Complex i{0.0, 1.0};
  std::array<Matrix3c, 8> m;
  for (auto& x : m) x.setZero();

  m[0](0, 1) = 1.0;
  m[0](1, 0) = 1.0;

  m[1](0, 1) = -i;
  m[1](1, 0) = i;

  m[2](0, 0) = 1.0;
  m[2](1, 1) = -1.0;

  m[3](0, 2) = 1.0;
  m[3](2, 0) = 1.0;

  m[4](0, 2) = -i;
  m[4](2, 0) = i;

  m[5](1, 2) = 1.0;
  m[5](2, 1) = 1.0;

  m[6](1, 2) = -i;
  m[6](2, 1) = i;

  m[7](0, 0) = kInvSqrt3;
  m[7](1, 1) = kInvSqrt3;
  m[7](2, 2) = -2.0 * kInvSqrt3;
  return m;
}

}  // namespace

StructureTensors::StructureTensors()
    : canonical_f_(canonicalize(f_table(), true)),
      canonical_d_(canonicalize(d_table(), false)),
      expanded_f_(expand(canonical_f_, true)),
      expanded_d_(expand(canonical_d_, false)) {}

const StructureTensors& StructureTensors::instance() {
  static const StructureTensors tensors;
  return tensors;
}

double StructureTensors::f(int j, int k, int l) const {
  return lookup(canonical_f_, {j, k, l}, true);
}

double StructureTensors::d(int j, int k, int l) const {
  return lookup(canonical_d_, {j, k, l}, false);
}

const std::array<Matrix3c, 8>& basis() {
  static const std::array<Matrix3c, 8> m = make_basis();
  return m;
}

const Matrix3c& lambda(int i) {
  check_index(i);
  return basis()[static_cast<std::size_t>(i - 1)];
}

double f_symbol(int j, int k, int l) { return StructureTensors::instance().f(j, k, l); }

double d_symbol(int j, int k, int l) { return StructureTensors::instance().d(j, k, l); }

Matrix3c product_expansion(int j, int k) {
  check_index(j);
  check_index(k);
  Matrix3c out = Matrix3c::Zero();
  if (j == k) out.diagonal().setConstant(2.0 / 3.0);
  for (int l = 1; l <= 8; ++l) {
    const Complex coeff{d_symbol(j, k, l), f_symbol(j, k, l)};
    if (coeff != Complex{}) out += coeff * lambda(l);
  }
  return out;
}

}  // namespace qutrit::gellmann
