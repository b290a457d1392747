// SPDX-License-Identifier: Apache-2.0
#include "treeshift/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace treeshift {

namespace {

void check_system(const TransitionSystem& sys) {
  if (sys.k < 1 || sys.d < 1 || static_cast<int>(sys.matrices.size()) != sys.k)
    raise(ErrorCode::InvalidArgument, "malformed transition system");
}

// Indices of each internal node's first child in the breadth-first layout.
std::vector<std::int64_t> first_child_table(int k, int n) {
  std::vector<std::int64_t> first;
  if (n == 0) return first;
  first.reserve(static_cast<std::size_t>(node_count(k, n - 1)));
  for (int level = 0; level < n; ++level) {
    const std::int64_t base = level_offset(k, level);
    const std::int64_t width = level_offset(k, level + 1) - base;
    const std::int64_t child_base = level_offset(k, level + 1);
    for (std::int64_t q = 0; q < width; ++q) first.push_back(child_base + q * k);
  }
  return first;
}

// d^(number of nodes) compared against the enumeration budget.
std::uint64_t checked_candidate_count(int d, int k, int n, std::uint64_t budget) {
  BigInt candidates;
  mpz_ui_pow_ui(candidates.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(node_count(k, n)));
  if (candidates > BigInt(static_cast<unsigned long>(budget))) {
    std::ostringstream os;
    os << "enumeration needs " << candidates.get_str() << " candidate labelings, over the budget of "
       << budget;
    raise(ErrorCode::BudgetExceeded, os.str());
  }
  return static_cast<std::uint64_t>(candidates.get_ui());
}

bool advance_odometer(std::vector<int>& labels, int d) {
  for (std::size_t t = labels.size(); t-- > 0;) {
    if (++labels[t] < d) return true;
    labels[t] = 0;
  }
  return false;
}

}  // namespace

CountVector step_counts(const CountVector& v, const TransitionSystem& sys) {
  check_system(sys);
  if (static_cast<int>(v.size()) != sys.d)
    raise(ErrorCode::InvalidArgument, "count vector length does not match the alphabet");
  CountVector w(static_cast<std::size_t>(sys.d));
  BigInt acc;
  for (int i = 0; i < sys.d; ++i) {
    BigInt prod = 1;
    for (int m = 0; m < sys.k; ++m) {
      acc = 0;
      const Matrix01& mat = sys.matrices[static_cast<std::size_t>(m)];
      for (int j = 0; j < sys.d; ++j)
        if (mat(i, j)) acc += v[static_cast<std::size_t>(j)];
      prod *= acc;
    }
    w[static_cast<std::size_t>(i)] = prod;
  }
  return w;
}

BigInt complexity_exact(const TransitionSystem& sys, int n, int exact_limit) {
  check_system(sys);
  if (n < 0) raise(ErrorCode::InvalidArgument, "negative block height");
  if (n > exact_limit) {
    std::ostringstream os;
    os << "n = " << n << " is over the exact limit " << exact_limit
       << "; use the log-domain complexity instead";
    raise(ErrorCode::LimitExceeded, os.str());
  }
  CountVector v(static_cast<std::size_t>(sys.d), BigInt(1));
  for (int step = 0; step < n; ++step) v = step_counts(v, sys);
  BigInt total = 0;
  for (const BigInt& x : v) total += x;
  return total;
}

ProjectiveState projective_initial(const TransitionSystem& sys) {
  check_system(sys);
  ProjectiveState s;
  s.eta.assign(static_cast<std::size_t>(sys.d), 1.0);
  return s;
}

ProjectiveState projective_step(const ProjectiveState& s, const TransitionSystem& sys) {
  check_system(sys);
  if (static_cast<int>(s.eta.size()) != sys.d)
    raise(ErrorCode::InvalidArgument, "state does not match the alphabet");
  std::vector<double> w(static_cast<std::size_t>(sys.d), 1.0);
  for (int i = 0; i < sys.d; ++i) {
    for (int m = 0; m < sys.k; ++m) {
      double acc = 0.0;
      const Matrix01& mat = sys.matrices[static_cast<std::size_t>(m)];
      for (int j = 0; j < sys.d; ++j)
        if (mat(i, j)) acc += s.eta[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] *= acc;
    }
  }
  const double scale = *std::max_element(w.begin(), w.end());
  if (!(scale > 0.0))
    raise(ErrorCode::DegenerateSystem, "projective step collapsed to zero; no blocks continue");
  ProjectiveState next;
  next.eta.resize(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) next.eta[t] = w[t] / scale;
  next.step = s.step + 1;
  next.scaled_sum = s.scaled_sum + std::log(scale) / std::pow(static_cast<double>(sys.k), s.step + 1);
  return next;
}

double projective_log_scale(const ProjectiveState& s, int k) {
  return std::pow(static_cast<double>(k), s.step) * s.scaled_sum;
}

double projective_log_norm(const ProjectiveState& s, int k) {
  double sum = 0.0;
  for (double e : s.eta) sum += e;
  return projective_log_scale(s, k) + std::log(sum);
}

double complexity_log(const TransitionSystem& sys, int n) {
  if (n < 0) raise(ErrorCode::InvalidArgument, "negative block height");
  ProjectiveState s = projective_initial(sys);
  for (int step = 0; step < n; ++step) s = projective_step(s, sys);
  return projective_log_norm(s, sys.k);
}

ComplexityValue complexity_value(const TransitionSystem& sys, int n, int exact_limit) {
  ComplexityValue v;
  v.n = n;
  v.log_value = complexity_log(sys, n);
  if (n <= exact_limit) v.exact = complexity_exact(sys, n, exact_limit);
  return v;
}

std::uint64_t oracle_count_blocks(const TransitionSystem& sys, int n, std::uint64_t budget) {
  check_system(sys);
  if (n < 0) raise(ErrorCode::InvalidArgument, "negative block height");
  checked_candidate_count(sys.d, sys.k, n, budget);
  const auto first = first_child_table(sys.k, n);
  std::vector<int> labels(static_cast<std::size_t>(node_count(sys.k, n)), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t idx = 0; idx < first.size() && ok; ++idx) {
      const int parent = labels[idx];
      const std::int64_t fc = first[idx];
      for (int m = 0; m < sys.k; ++m) {
        if (!sys.matrices[static_cast<std::size_t>(m)](parent, labels[static_cast<std::size_t>(fc + m)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  } while (advance_odometer(labels, sys.d));
  return count;
}

std::vector<Block> enumerate_blocks(const TransitionSystem& sys, int n, std::uint64_t cap,
                                    std::uint64_t budget) {
  check_system(sys);
  if (n < 0) raise(ErrorCode::InvalidArgument, "negative block height");
  checked_candidate_count(sys.d, sys.k, n, budget);
  const auto first = first_child_table(sys.k, n);
  std::vector<int> labels(static_cast<std::size_t>(node_count(sys.k, n)), 0);
  std::vector<Block> out;
  do {
    if (out.size() >= cap) break;
    bool ok = true;
    for (std::size_t idx = 0; idx < first.size() && ok; ++idx) {
      const int parent = labels[idx];
      const std::int64_t fc = first[idx];
      for (int m = 0; m < sys.k; ++m) {
        if (!sys.matrices[static_cast<std::size_t>(m)](parent, labels[static_cast<std::size_t>(fc + m)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(make_block(sys.k, sys.d, n, labels));
  } while (advance_odometer(labels, sys.d));
  return out;
}

}  // namespace treeshift
