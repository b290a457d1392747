// SPDX-License-Identifier: Apache-2.0
#include "treeshift/recode.hpp"

#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace treeshift {

namespace {

void check_forbidden(const ForbiddenSet& f) {
  if (f.k < 1) raise(ErrorCode::InvalidArgument, "k must be at least 1");
  if (f.d < 2) raise(ErrorCode::InvalidArgument, "alphabet size d must be at least 2");
  if (f.s < 1) raise(ErrorCode::InvalidArgument, "forbidden blocks must have height at least 1");
  for (const Block& b : f.blocks) {
    if (b.k != f.k || b.d != f.d || b.height != f.s)
      raise(ErrorCode::InvalidArgument, "forbidden block does not match (k, d, s)");
    if (static_cast<std::int64_t>(b.labels.size()) != node_count(f.k, f.s))
      raise(ErrorCode::InvalidArgument, "forbidden block has a malformed label array");
    for (int v : b.labels)
      if (v < 0 || v >= f.d) raise(ErrorCode::InvalidArgument, "forbidden block label out of range");
  }
}

void check_enumeration_budget(const ForbiddenSet& f, int height, std::uint64_t budget) {
  BigInt candidates;
  mpz_ui_pow_ui(candidates.get_mpz_t(), static_cast<unsigned long>(f.d),
                static_cast<unsigned long>(node_count(f.k, height)));
  if (candidates > BigInt(static_cast<unsigned long>(budget))) {
    std::ostringstream os;
    os << "height-" << height << " enumeration needs " << candidates.get_str()
       << " candidates, over the budget of " << budget;
    raise(ErrorCode::BudgetExceeded, os.str());
  }
}

bool advance_odometer(std::vector<int>& labels, int d) {
  for (std::size_t t = labels.size(); t-- > 0;) {
    if (++labels[t] < d) return true;
    labels[t] = 0;
  }
  return false;
}

}  // namespace

std::optional<int> SymbolTable::index_of(const Block& b) const {
  for (std::size_t t = 0; t < symbols.size(); ++t)
    if (symbols[t] == b) return static_cast<int>(t);
  return std::nullopt;
}

SymbolTable enumerate_allowed_s_blocks(const ForbiddenSet& f, std::uint64_t budget) {
  check_forbidden(f);
  check_enumeration_budget(f, f.s, budget);
  std::set<std::vector<int>> forbidden;
  for (const Block& b : f.blocks) forbidden.insert(b.labels);
  SymbolTable table;
  std::vector<int> labels(static_cast<std::size_t>(node_count(f.k, f.s)), 0);
  do {
    // A forbidden block has the same height as the candidate, so the root is
    // the only place it could sit.
    if (!forbidden.count(labels)) table.symbols.push_back(make_block(f.k, f.d, f.s, labels));
  } while (advance_odometer(labels, f.d));
  return table;
}

Recoding higher_block_presentation(const ForbiddenSet& f, std::uint64_t budget) {
  SymbolTable table = enumerate_allowed_s_blocks(f, budget);
  const int n_symbols = static_cast<int>(table.symbols.size());
  if (n_symbols == 0)
    raise(ErrorCode::EmptyShift, "empty tree-shift: every height-" + std::to_string(f.s) +
                                     " block is forbidden");
  if (n_symbols == 1)
    raise(ErrorCode::InvalidArgument,
          "single allowed block; the presentation needs an alphabet of size at least 2");

  // Overlap data per symbol: its height-(s-1) top and, per direction, the
  // height-(s-1) sub-block under each child.
  std::vector<std::vector<int>> tops(static_cast<std::size_t>(n_symbols));
  std::vector<std::vector<std::vector<int>>> child_subs(static_cast<std::size_t>(n_symbols));
  for (int u = 0; u < n_symbols; ++u) {
    const Block& b = table.symbols[static_cast<std::size_t>(u)];
    tops[static_cast<std::size_t>(u)] = sub_block(b, {}, f.s - 1).labels;
    child_subs[static_cast<std::size_t>(u)].reserve(static_cast<std::size_t>(f.k));
    for (int m = 0; m < f.k; ++m)
      child_subs[static_cast<std::size_t>(u)].push_back(sub_block(b, {m}, f.s - 1).labels);
  }

  std::vector<Matrix01> mats(static_cast<std::size_t>(f.k), Matrix01(n_symbols));
  for (int m = 0; m < f.k; ++m)
    for (int u = 0; u < n_symbols; ++u)
      for (int v = 0; v < n_symbols; ++v)
        if (child_subs[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)] ==
            tops[static_cast<std::size_t>(v)])
          mats[static_cast<std::size_t>(m)].set(u, v, 1);

  Recoding out;
  out.system = make_system("", std::move(mats));
  out.table = std::move(table);
  out.report = validate(out.system);
  return out;
}

BigInt count_allowed_blocks(const ForbiddenSet& f, int height, std::uint64_t budget) {
  check_forbidden(f);
  if (height < 0) raise(ErrorCode::InvalidArgument, "negative block height");
  // Below the constraint height nothing is forbidden.
  if (height < f.s) {
    BigInt total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(f.d),
                  static_cast<unsigned long>(node_count(f.k, height)));
    return total;
  }
  check_enumeration_budget(f, f.s, budget);

  // States are the height-(s-1) top blocks. An allowed height-(h+1) block is
  // an allowed height-s block at the root whose k child states continue into
  // allowed height-h blocks, so
  //   T_{h+1}(top(u)) += prod_m T_h(child state m of u)
  // over allowed height-s blocks u. Counting starts at h = s - 1 where every
  // block is allowed.
  std::map<std::vector<int>, int> state_index;
  std::vector<int> state_labels(static_cast<std::size_t>(node_count(f.k, f.s - 1)), 0);
  int n_states = 0;
  do {
    state_index.emplace(state_labels, n_states++);
  } while (advance_odometer(state_labels, f.d));

  std::set<std::vector<int>> forbidden;
  for (const Block& b : f.blocks) forbidden.insert(b.labels);

  struct Transition {
    int top = 0;
    std::vector<int> children;
  };
  std::vector<Transition> transitions;
  std::vector<int> labels(static_cast<std::size_t>(node_count(f.k, f.s)), 0);
  do {
    if (forbidden.count(labels)) continue;
    Block u = make_block(f.k, f.d, f.s, labels);
    Transition t;
    t.top = state_index.at(sub_block(u, {}, f.s - 1).labels);
    t.children.reserve(static_cast<std::size_t>(f.k));
    for (int m = 0; m < f.k; ++m) t.children.push_back(state_index.at(sub_block(u, {m}, f.s - 1).labels));
    transitions.push_back(std::move(t));
  } while (advance_odometer(labels, f.d));

  std::vector<BigInt> counts(static_cast<std::size_t>(n_states), BigInt(1));
  for (int h = f.s - 1; h < height; ++h) {
    std::vector<BigInt> next(static_cast<std::size_t>(n_states), BigInt(0));
    for (const Transition& t : transitions) {
      BigInt prod = 1;
      for (int c : t.children) prod *= counts[static_cast<std::size_t>(c)];
      next[static_cast<std::size_t>(t.top)] += prod;
    }
    counts = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& c : counts) total += c;
  return total;
}

bool verify_recoding(const ForbiddenSet& original, const TransitionSystem& recoded, int n_check,
                     std::uint64_t budget, int exact_limit) {
  if (n_check < 1) raise(ErrorCode::InvalidArgument, "n_check must be at least 1");
  const int limit = std::max(exact_limit, n_check);
  for (int n = 1; n <= n_check; ++n) {
    const BigInt lhs = count_allowed_blocks(original, n + original.s, budget);
    const BigInt rhs = complexity_exact(recoded, n, limit);
    if (lhs != rhs) return false;
  }
  return true;
}

ForbiddenSet forbidden_from_markov(const TransitionSystem& sys) {
  if (sys.k < 1 || sys.d < 2) raise(ErrorCode::InvalidArgument, "malformed transition system");
  ForbiddenSet f;
  f.k = sys.k;
  f.d = sys.d;
  f.s = 1;
  std::vector<int> labels(static_cast<std::size_t>(node_count(sys.k, 1)), 0);
  do {
    bool ok = true;
    for (int m = 0; m < sys.k && ok; ++m)
      ok = sys.matrices[static_cast<std::size_t>(m)](labels[0], labels[static_cast<std::size_t>(1 + m)]) != 0;
    if (!ok) f.blocks.push_back(make_block(sys.k, sys.d, 1, labels));
  } while (advance_odometer(labels, sys.d));
  return f;
}

}  // namespace treeshift
