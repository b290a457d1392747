// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treeshift/bigint.hpp"
#include "treeshift/types.hpp"

namespace treeshift {

// p(n) has thousands of digits already around n = 12 for binary systems;
// beyond that the log-domain iteration takes over.
inline constexpr int kDefaultExactLimit = 12;
// Budget on candidate labelings for the naive enumerators.
inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 25;

// entry i = number of allowed height-n blocks rooted at symbol i.
using CountVector = std::vector<BigInt>;

// One step of the counting recursion: w_i = prod_m (sum_j A_m(i,j) v_j).
CountVector step_counts(const CountVector& v, const TransitionSystem& sys);

// p(n) as an exact integer: n applications of step_counts to the all-ones
// vector, summed. p(0) = d by convention.
BigInt complexity_exact(const TransitionSystem& sys, int n, int exact_limit = kDefaultExactLimit);

// Max-normalized projective iterate of the counting map. The scale is kept as
// scaled_sum = sum_{j<step} log(M_j) / k^(j+1), which stays O(1), so that
// log p(step) = k^step * scaled_sum + log(sum_i eta_i).
struct ProjectiveState {
  std::vector<double> eta;  // max entry = 1
  double scaled_sum = 0.0;
  int step = 0;
};

ProjectiveState projective_initial(const TransitionSystem& sys);
ProjectiveState projective_step(const ProjectiveState& s, const TransitionSystem& sys);

// log of the accumulated scale, k^step * scaled_sum.
double projective_log_scale(const ProjectiveState& s, int k);
// log p at the state's current step.
double projective_log_norm(const ProjectiveState& s, int k);

// log p(n) via n projective steps; log d for n = 0.
double complexity_log(const TransitionSystem& sys, int n);

// p(n) in both representations; `exact` is present while n is within the
// exact limit, and log_value always agrees with it to 1e-9 relative.
struct ComplexityValue {
  int n = 0;
  std::optional<BigInt> exact;
  double log_value = 0.0;
};

ComplexityValue complexity_value(const TransitionSystem& sys, int n,
                                 int exact_limit = kDefaultExactLimit);

// Independent verifier of complexity_exact: enumerates every labeling of the
// height-n block and counts those whose parent/child pairs are all allowed.
// Deliberately does not share the step_counts recursion.
std::uint64_t oracle_count_blocks(const TransitionSystem& sys, int n,
                                  std::uint64_t budget = kDefaultOracleBudget);

// Allowed height-n blocks in lexicographic label order, at most `cap` items.
std::vector<Block> enumerate_blocks(const TransitionSystem& sys, int n, std::uint64_t cap,
                                    std::uint64_t budget = kDefaultOracleBudget);

}  // namespace treeshift
