// SPDX-License-Identifier: Apache-2.0
#include "treeshift/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "treeshift/complexity.hpp"

namespace treeshift {

namespace {

// 1 + k + ... + k^n, as a double.
double total_nodes(int k, int n) {
  if (k == 1) return static_cast<double>(n) + 1.0;
  return (std::pow(static_cast<double>(k), n + 1) - 1.0) / (static_cast<double>(k) - 1.0);
}

void check_estimator_args(int n_max, double tol) {
  if (n_max < 2) raise(ErrorCode::InvalidArgument, "n_max must be at least 2");
  if (!(tol > 0.0)) raise(ErrorCode::InvalidArgument, "tolerance must be positive");
}

}  // namespace

double operator_norm_rowmax(const Matrix01& m) { return static_cast<double>(m.max_row_sum()); }

bool zero_by_row_sums(const TransitionSystem& sys) {
  return std::all_of(sys.matrices.begin(), sys.matrices.end(),
                     [](const Matrix01& m) { return m.max_row_sum() == 1; });
}

BoundsReport bounds_report(const TransitionSystem& sys) {
  BoundsReport r;
  r.ps_upper_trivial = std::log(static_cast<double>(sys.d));
  double norm_sum = std::log(static_cast<double>(sys.d));
  for (const auto& m : sys.matrices) {
    const double rowmax = operator_norm_rowmax(m);
    // A matrix with an all-zero maximal row kills every block; the zero bound
    // is still valid, so clamp instead of propagating -inf.
    norm_sum += rowmax > 0.0 ? std::log(rowmax) : -std::numeric_limits<double>::infinity();
  }
  r.ps_upper_norm = std::max(0.0, norm_sum / static_cast<double>(sys.k));
  r.ps_upper = std::min(r.ps_upper_norm, r.ps_upper_trivial);
  r.bc_upper = std::log(static_cast<double>(sys.k));
  r.zero_by_row_sums = zero_by_row_sums(sys);
  return r;
}

EntropyEstimate h_ps_estimate(const TransitionSystem& sys, int n_max, double tol) {
  check_estimator_args(n_max, tol);
  if (zero_by_row_sums(sys)) return {0.0, 0, 0.0, true, "exact-shortcut-zero"};
  ProjectiveState s = projective_initial(sys);
  double prev = projective_log_norm(s, sys.k) / total_nodes(sys.k, 0);  // log d at n = 0
  EntropyEstimate est;
  est.method = "projective-iteration";
  for (int n = 1; n <= n_max; ++n) {
    s = projective_step(s, sys);
    const double h = projective_log_norm(s, sys.k) / total_nodes(sys.k, n);
    est.value = h;
    est.n_used = n;
    est.last_delta = std::abs(h - prev);
    if (n >= 2 && est.last_delta < tol) {
      est.converged = true;
      return est;
    }
    prev = h;
  }
  est.converged = false;
  return est;
}

EntropyEstimate h_bc_estimate(const TransitionSystem& sys, int n_max, double tol) {
  check_estimator_args(n_max, tol);
  if (n_max < 3) raise(ErrorCode::InvalidArgument, "n_max must be at least 3");
  if (zero_by_row_sums(sys)) return {0.0, 0, 0.0, true, "exact-shortcut-zero"};
  const EntropyEstimate ps = h_ps_estimate(sys, n_max, tol);
  if (ps.value > 10.0 * tol) {
    // Positive h_ps makes the limit exactly log k; the raw O(1/n) ratio is
    // available through h_bc_raw_ratio.
    return {std::log(static_cast<double>(sys.k)), ps.n_used, 0.0, true, "shortcut-log-k"};
  }
  ProjectiveState s = projective_initial(sys);
  EntropyEstimate est;
  est.method = "projective-iteration";
  double prev = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    s = projective_step(s, sys);
    const double logp = projective_log_norm(s, sys.k);
    if (!(logp > 0.0))
      raise(ErrorCode::DegenerateSystem, "p(n) <= 1; the double-log ratio is undefined");
    const double ratio = std::log(logp) / static_cast<double>(n);
    est.last_delta = std::abs(ratio - prev);
    est.value = ratio;
    est.n_used = n;
    prev = ratio;
  }
  est.value = std::max(0.0, est.value);
  est.converged = est.last_delta <= tol;
  return est;
}

double h_bc_raw_ratio(const TransitionSystem& sys, int n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "n must be positive");
  const double logp = complexity_log(sys, n);
  if (!(logp > 0.0))
    raise(ErrorCode::DegenerateSystem, "p(n) <= 1; the double-log ratio is undefined");
  return std::log(logp) / static_cast<double>(n);
}

bool dominates(const TransitionSystem& x, const TransitionSystem& y) {
  if (x.k != y.k || x.d != y.d) raise(ErrorCode::InvalidArgument, "shape mismatch");
  for (int m = 0; m < x.k; ++m)
    if (!x.matrices[static_cast<std::size_t>(m)].dominates(y.matrices[static_cast<std::size_t>(m)]))
      return false;
  return true;
}

double conjugacy_scaled_entropy(double h, int k, int s) {
  if (h < 0.0 || k < 1 || s < 0) raise(ErrorCode::InvalidArgument, "bad scaling arguments");
  return std::pow(static_cast<double>(k), s) * h;
}

double series_reference(SeriesKind kind, int terms) {
  if (terms < 2) raise(ErrorCode::InvalidArgument, "need at least the n = 2 term");
  double sum = 0.0;
  // Fib(1) = Fib(2) = 1; fib holds Fib(n+1) as the loop enters iteration n.
  double fib_prev = 1.0, fib = 2.0;
  double pow2 = 0.25;
  // The weight underflows to zero long before the Fibonacci terms overflow,
  // so the loop always stops on finite values.
  for (int n = 2; n <= terms && pow2 > 0.0; ++n) {
    sum += pow2 * (kind == SeriesKind::FibSeries ? std::log(fib) : std::log(static_cast<double>(n)));
    pow2 *= 0.5;
    const double next = fib + fib_prev;
    fib_prev = fib;
    fib = next;
  }
  return sum;
}

double growth_constant(const TransitionSystem& sys, int n_max, double tol) {
  return std::exp(h_ps_estimate(sys, n_max, tol).value);
}

}  // namespace treeshift
