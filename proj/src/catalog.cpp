// SPDX-License-Identifier: Apache-2.0
#include "treeshift/catalog.hpp"

#include <string>

namespace treeshift {

Matrix01 binary_matrix(char letter) {
  switch (letter) {
    case 'A': return Matrix01{{1, 1}, {1, 1}};
    case 'B': return Matrix01{{1, 0}, {0, 1}};
    case 'C': return Matrix01{{0, 1}, {1, 0}};
    case 'D': return Matrix01{{1, 1}, {1, 0}};
    case 'E': return Matrix01{{1, 0}, {1, 1}};
    case 'F': return Matrix01{{0, 1}, {1, 1}};
    case 'G': return Matrix01{{1, 1}, {0, 1}};
    default: raise(ErrorCode::InvalidArgument, "unknown catalog matrix letter");
  }
}

const std::vector<TransitionSystem>& canonical_binary_catalog() {
  static const std::vector<TransitionSystem> catalog = [] {
    const char pairs[28][2] = {
        {'A', 'A'}, {'A', 'B'}, {'A', 'C'}, {'A', 'D'}, {'A', 'E'}, {'A', 'F'}, {'A', 'G'},
        {'B', 'B'}, {'B', 'C'}, {'B', 'D'}, {'B', 'E'}, {'B', 'F'}, {'B', 'G'},
        {'C', 'C'}, {'C', 'D'}, {'C', 'E'}, {'C', 'F'}, {'C', 'G'},
        {'D', 'D'}, {'D', 'E'}, {'D', 'F'}, {'D', 'G'},
        {'E', 'E'}, {'E', 'F'}, {'E', 'G'},
        {'F', 'F'}, {'F', 'G'},
        {'G', 'G'},
    };
    std::vector<TransitionSystem> out;
    out.reserve(28);
    for (int i = 0; i < 28; ++i) {
      out.push_back(make_system("X_" + std::to_string(i + 1),
                                {binary_matrix(pairs[i][0]), binary_matrix(pairs[i][1])}));
    }
    return out;
  }();
  return catalog;
}

const TransitionSystem& catalog_system(int index) {
  const auto& catalog = canonical_binary_catalog();
  if (index < 1 || index > static_cast<int>(catalog.size()))
    raise(ErrorCode::InvalidArgument, "catalog index must be in 1..28");
  return catalog[static_cast<std::size_t>(index - 1)];
}

}  // namespace treeshift
