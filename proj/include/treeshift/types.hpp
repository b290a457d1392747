// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "treeshift/error.hpp"

namespace treeshift {

// Square 0/1 matrix, flat row-major storage.
struct Matrix01 {
  int dim = 0;
  std::vector<std::uint8_t> a;

  Matrix01() = default;
  explicit Matrix01(int d) : dim(d), a(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0) {}
  Matrix01(std::initializer_list<std::initializer_list<int>> rows);

  static Matrix01 from_rows(const std::vector<std::vector<int>>& rows);
  std::vector<std::vector<int>> to_rows() const;

  std::uint8_t operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)];
  }
  void set(int i, int j, std::uint8_t v) {
    a[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)] = v;
  }

  int row_sum(int i) const;
  int col_sum(int j) const;
  int max_row_sum() const;

  // Entrywise comparison.
  bool dominates(const Matrix01& other) const;

  bool operator==(const Matrix01&) const = default;
};

// A node address: sequence of directions, each in {0, ..., k-1}. The empty
// word is the root.
using Word = std::vector<int>;

// k transition matrices over the alphabet {0, ..., d-1}. matrices[m](i, j) = 1
// means symbol i may be followed by symbol j in direction m.
struct TransitionSystem {
  std::string name;
  int k = 0;
  int d = 0;
  std::vector<Matrix01> matrices;
};

struct ValidationReport {
  bool admissible = true;
  std::vector<std::pair<int, int>> zero_rows;  // (matrix index, row index)
  std::vector<std::pair<int, int>> zero_cols;  // (matrix index, column index)
  std::vector<std::string> messages;
};

struct ValidatedSystem {
  TransitionSystem system;
  ValidationReport report;
};

// Builds a system from raw integer matrices. Rejects malformed input
// (non-square, mismatched dimensions, entries outside {0,1}, d < 2, empty
// matrix list). Zero rows/columns are flagged in the report, not fatal: the
// counting and decision procedures below stay well defined on such systems.
ValidatedSystem validate_system(const std::vector<std::vector<std::vector<int>>>& raw,
                                const std::string& name = "");

// Re-validates an already constructed system (idempotent).
ValidationReport validate(const TransitionSystem& sys);

TransitionSystem make_system(std::string name, std::vector<Matrix01> mats);

// Complete k-ary tree of height `height`. Labels are stored breadth-first,
// each level in lexicographic word order, so the root is labels[0] and the
// children of the node at in-level position q sit at positions q*k+m of the
// next level.
struct Block {
  int k = 2;
  int d = 2;
  int height = 0;
  std::vector<int> labels;

  bool operator==(const Block&) const = default;
};

// Number of nodes strictly above level `level`, i.e. (k^level - 1)/(k - 1).
std::int64_t level_offset(int k, int level);
// Total nodes of a height-`height` block: (k^(height+1) - 1)/(k - 1).
std::int64_t node_count(int k, int height);
// Position of node `w` in the breadth-first layout.
std::int64_t node_index(int k, const Word& w);

Block make_block(int k, int d, int height, std::vector<int> labels);
Block uniform_block(int k, int d, int height, int label);

int block_node_label(const Block& b, const Word& w);
void set_block_node_label(Block& b, const Word& w, int label);

// Height-h sub-block rooted at `root`; requires |root| + h <= b.height.
Block sub_block(const Block& b, const Word& root, int h);

}  // namespace treeshift
