// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "treeshift/types.hpp"

namespace treeshift {

// The seven admissible 2x2 transition matrices, addressed 'A' through 'G':
//   A = 11/11  B = 10/01  C = 01/10  D = 11/10  E = 10/11  F = 01/11  G = 11/01
Matrix01 binary_matrix(char letter);

// The 28 binary systems X_1 ... X_28: all unordered pairs over A..G, in the
// canonical order (A,A), (A,B), ..., (A,G), (B,B), ..., (G,G).
const std::vector<TransitionSystem>& canonical_binary_catalog();

// 1-based accessor into the catalog (index in 1..28).
const TransitionSystem& catalog_system(int index);

}  // namespace treeshift
