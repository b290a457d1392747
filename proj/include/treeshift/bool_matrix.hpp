// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "treeshift/types.hpp"

namespace treeshift {

// Positivity pattern of a nonnegative square matrix.
struct BoolMatrix {
  int dim = 0;
  std::vector<std::uint8_t> bits;

  BoolMatrix() = default;
  explicit BoolMatrix(int d) : dim(d), bits(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0) {}

  static BoolMatrix identity(int d);
  static BoolMatrix pattern_of(const Matrix01& m);

  bool get(int i, int j) const {
    return bits[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)] != 0;
  }
  void set(int i, int j, bool v) {
    bits[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)] = v ? 1 : 0;
  }

  bool all_true() const;

  bool operator==(const BoolMatrix&) const = default;
};

// (P*Q)(i,j) = OR_l (P(i,l) AND Q(l,j)); equals the positivity pattern of the
// integer product of any nonnegative matrices with these patterns.
BoolMatrix boolean_product(const BoolMatrix& p, const BoolMatrix& q);

struct BoolMatrixHash {
  std::size_t operator()(const BoolMatrix& m) const;
};

}  // namespace treeshift
