// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treeshift/bigint.hpp"
#include "treeshift/complexity.hpp"
#include "treeshift/types.hpp"

namespace treeshift {

// Finite-type constraints: every block of height s listed here is forbidden
// at every node of a tree.
struct ForbiddenSet {
  int k = 2;
  int d = 2;
  int s = 1;  // common height of all forbidden blocks
  std::vector<Block> blocks;
};

// Alphabet of the higher-block presentation: the allowed height-s blocks in
// lexicographic label order.
struct SymbolTable {
  std::vector<Block> symbols;

  std::optional<int> index_of(const Block& b) const;
};

struct Recoding {
  TransitionSystem system;
  SymbolTable table;
  ValidationReport report;
};

// Every height-s block not in the forbidden list (equal heights mean the only
// possible match is at the root).
SymbolTable enumerate_allowed_s_blocks(const ForbiddenSet& f,
                                       std::uint64_t budget = kDefaultOracleBudget);

// The conjugate Markov presentation over the allowed height-s blocks:
// A'_m(u, v) = 1 iff the height-(s-1) top of v equals the height-(s-1)
// sub-block of u rooted at its direction-m child.
Recoding higher_block_presentation(const ForbiddenSet& f,
                                   std::uint64_t budget = kDefaultOracleBudget);

// Number of height-`height` blocks containing no forbidden block, computed by
// a local-constraint recursion on the original alphabet (state = the top
// height-(s-1) block, transitions filtered directly against the forbidden
// list). Shares no code with the Markov product recursion it is checked
// against.
BigInt count_allowed_blocks(const ForbiddenSet& f, int height,
                            std::uint64_t budget = kDefaultOracleBudget);

// Checks the conjugacy count identity p_X(n + s) = p_Y(n) for 1 <= n <= n_check,
// with the left side from count_allowed_blocks and the right side from
// complexity_exact on the recoded system.
bool verify_recoding(const ForbiddenSet& original, const TransitionSystem& recoded, int n_check,
                     std::uint64_t budget = kDefaultOracleBudget,
                     int exact_limit = kDefaultExactLimit);

// Re-expresses a Markov system as height-1 forbidden blocks: (i; j_0..j_{k-1})
// is forbidden iff some A_m(i, j_m) = 0.
ForbiddenSet forbidden_from_markov(const TransitionSystem& sys);

}  // namespace treeshift
