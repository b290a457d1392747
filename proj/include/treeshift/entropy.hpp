// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "treeshift/types.hpp"

namespace treeshift {

// The h_ps tail decays like k^-n, so 40 steps exceed double precision for
// every k >= 2.
inline constexpr int kDefaultEntropyMaxSteps = 40;
inline constexpr double kDefaultEntropyTol = 1e-10;

struct EntropyEstimate {
  double value = 0.0;  // natural log units
  int n_used = 0;
  double last_delta = 0.0;
  bool converged = false;
  std::string method;  // "projective-iteration", "exact-shortcut-zero", "shortcut-log-k"
};

struct BoundsReport {
  double ps_upper_norm = 0.0;     // (log d + sum_m log ||A_m||_op) / k
  double ps_upper_trivial = 0.0;  // log d
  double ps_upper = 0.0;          // min of the two
  double bc_upper = 0.0;          // log k
  bool zero_by_row_sums = false;  // every matrix has max row sum 1 => p(n) = d
};

// Operator norm induced by the max norm: for a nonnegative matrix, the
// maximal row sum.
double operator_norm_rowmax(const Matrix01& m);

bool zero_by_row_sums(const TransitionSystem& sys);

BoundsReport bounds_report(const TransitionSystem& sys);

// h_ps = lim log p(n) / (1 + k + ... + k^n), iterated until the step-to-step
// delta drops below tol or n_max is reached. Systems with all row sums 1 have
// p(n) = d and return exactly 0.
EntropyEstimate h_ps_estimate(const TransitionSystem& sys, int n_max = kDefaultEntropyMaxSteps,
                              double tol = kDefaultEntropyTol);

// h_bc = lim log log p(n) / n. The raw ratio converges only at rate O(1/n),
// but the limit is exactly log k whenever h_ps > 0, so the estimator returns
// log k once h_ps clears 10*tol and exposes the raw ratio separately.
EntropyEstimate h_bc_estimate(const TransitionSystem& sys, int n_max = kDefaultEntropyMaxSteps,
                              double tol = kDefaultEntropyTol);

// Diagnostic: log log p(n) / n at a fixed n.
double h_bc_raw_ratio(const TransitionSystem& sys, int n);

// Entrywise comparison, matrix by matrix in list order. Dominating systems
// have pointwise larger block counts, hence larger entropy.
bool dominates(const TransitionSystem& x, const TransitionSystem& y);

// Entropy of the height-s higher-block presentation: k^s * h.
double conjugacy_scaled_entropy(double h, int k, int s);

// Closed-form partial sums used to cross-check the estimator on the binary
// catalog: sum_{n=2}^{terms} 2^-n log Fib(n+1) and sum_{n=2}^{terms} 2^-n log n.
enum class SeriesKind { FibSeries, LogNSeries };
double series_reference(SeriesKind kind, int terms);

// exp(h_ps): the growth base c with p(n) ~ c^((k^(n+1)-1)/(k-1)).
double growth_constant(const TransitionSystem& sys, int n_max = kDefaultEntropyMaxSteps,
                       double tol = kDefaultEntropyTol);

}  // namespace treeshift
