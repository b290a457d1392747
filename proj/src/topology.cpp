// SPDX-License-Identifier: Apache-2.0
#include "treeshift/topology.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_map>

namespace treeshift {

namespace {

constexpr std::size_t kMaxPatterns = std::size_t{1} << 20;
constexpr std::size_t kMaxCertificateWords = std::size_t{1} << 22;

// The finite semigroup of positivity patterns reachable from the generators
// bool(A_1), ..., bool(A_k) under right multiplication. succ[p][m] is the
// index of patterns[p] * bool(A_m).
struct PatternUniverse {
  int k = 0;
  std::vector<BoolMatrix> patterns;
  std::vector<int> gen_index;            // direction m -> index of bool(A_m)
  std::vector<std::vector<int>> succ;
};

PatternUniverse build_universe(const TransitionSystem& sys) {
  PatternUniverse u;
  u.k = sys.k;
  std::unordered_map<BoolMatrix, int, BoolMatrixHash> index;
  std::vector<BoolMatrix> gens;
  gens.reserve(static_cast<std::size_t>(sys.k));
  for (const auto& m : sys.matrices) gens.push_back(BoolMatrix::pattern_of(m));

  auto intern = [&](const BoolMatrix& b) {
    auto it = index.find(b);
    if (it != index.end()) return it->second;
    if (u.patterns.size() >= kMaxPatterns)
      raise(ErrorCode::BudgetExceeded, "pattern semigroup too large to enumerate");
    const int id = static_cast<int>(u.patterns.size());
    index.emplace(b, id);
    u.patterns.push_back(b);
    return id;
  };

  std::queue<int> work;
  for (const auto& g : gens) {
    const auto before = u.patterns.size();
    const int id = intern(g);
    u.gen_index.push_back(id);
    if (u.patterns.size() != before) work.push(id);
  }
  while (!work.empty()) {
    const int p = work.front();
    work.pop();
    if (static_cast<int>(u.succ.size()) <= p) u.succ.resize(static_cast<std::size_t>(p) + 1);
    u.succ[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(sys.k));
    for (int m = 0; m < sys.k; ++m) {
      const auto before = u.patterns.size();
      const int q = intern(boolean_product(u.patterns[static_cast<std::size_t>(p)], gens[static_cast<std::size_t>(m)]));
      u.succ[static_cast<std::size_t>(p)][static_cast<std::size_t>(m)] = q;
      if (u.patterns.size() != before) work.push(q);
    }
  }
  u.succ.resize(u.patterns.size());
  return u;
}

// A non-leaf node enters the winning set only after all of its successors,
// so among winning nodes every non-leaf edge leads strictly earlier in
// addition order; certificate extraction below therefore terminates.
struct WinSet {
  std::vector<char> win;
  std::vector<char> leaf;
};

// Least fixpoint of Win(p) <=> leaf(p) OR (for all m, Win(succ[p][m])),
// computed by round-robin sweeps to stabilization.
WinSet solve(const PatternUniverse& u, const std::function<bool(const BoolMatrix&)>& leaf_pred) {
  const std::size_t n = u.patterns.size();
  WinSet w;
  w.win.assign(n, 0);
  w.leaf.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (leaf_pred(u.patterns[p])) {
      w.leaf[p] = 1;
      w.win[p] = 1;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      if (w.win[p]) continue;
      bool all = true;
      for (int m = 0; m < u.k && all; ++m)
        all = w.win[static_cast<std::size_t>(u.succ[p][static_cast<std::size_t>(m)])] != 0;
      if (all) {
        w.win[p] = 1;
        changed = true;
      }
    }
  }
  return w;
}

// Emits the leaf words of the certificate trie below pattern p, stopping at
// the shallowest node whose pattern satisfies the leaf condition.
void collect_words(const PatternUniverse& u, const WinSet& w, int p, Word& prefix,
                   std::vector<Word>& out) {
  if (w.leaf[static_cast<std::size_t>(p)]) {
    out.push_back(prefix);
    return;
  }
  if (out.size() > kMaxCertificateWords)
    raise(ErrorCode::Internal, "certificate extraction exceeded the size cap");
  for (int m = 0; m < u.k; ++m) {
    prefix.push_back(m);
    collect_words(u, w, u.succ[static_cast<std::size_t>(p)][static_cast<std::size_t>(m)], prefix, out);
    prefix.pop_back();
  }
}

PrefixSet extract_certificate(const PatternUniverse& u, const WinSet& w) {
  // The root always expands once: the trie starts at the k direction
  // children, so the empty word never enters a certificate.
  PrefixSet cert;
  for (int m = 0; m < u.k; ++m) {
    Word prefix{m};
    collect_words(u, w, u.gen_index[static_cast<std::size_t>(m)], prefix, cert.words);
  }
  return cert;
}

bool holds_at_roots(const PatternUniverse& u, const WinSet& w) {
  for (int m = 0; m < u.k; ++m)
    if (!w.win[static_cast<std::size_t>(u.gen_index[static_cast<std::size_t>(m)])]) return false;
  return true;
}

void check_system(const TransitionSystem& sys) {
  if (sys.k < 1 || sys.d < 1 || static_cast<int>(sys.matrices.size()) != sys.k)
    raise(ErrorCode::InvalidArgument, "malformed transition system");
}

}  // namespace

const char* to_string(ChaosStatus s) {
  switch (s) {
    case ChaosStatus::Chaotic: return "Chaotic";
    case ChaosStatus::NotChaotic: return "NotChaotic";
    case ChaosStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool matrix_irreducible(const Matrix01& m) {
  const int d = m.dim;
  if (d == 0) raise(ErrorCode::InvalidArgument, "empty matrix");
  if (d == 1) return m(0, 0) == 1;
  // Strongly connected: node 0 reaches everything and everything reaches it.
  auto bfs = [&](bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(d), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w = 0; w < d; ++w) {
        const bool edge = forward ? m(v, w) != 0 : m(w, v) != 0;
        if (edge && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return bfs(true) && bfs(false);
}

bool matrix_primitive(const Matrix01& m) {
  const int d = m.dim;
  if (d == 0) raise(ErrorCode::InvalidArgument, "empty matrix");
  const BoolMatrix base = BoolMatrix::pattern_of(m);
  BoolMatrix power = base;
  const int wielandt = d * d - 2 * d + 2;
  for (int e = 1; e <= wielandt; ++e) {
    if (power.all_true()) return true;
    power = boolean_product(power, base);
  }
  return false;
}

Decision decide_mixing(const TransitionSystem& sys) {
  check_system(sys);
  const PatternUniverse u = build_universe(sys);
  const WinSet w = solve(u, [](const BoolMatrix& b) { return b.all_true(); });
  Decision dec;
  dec.method = "pattern-fixpoint";
  dec.holds = holds_at_roots(u, w);
  if (dec.holds) dec.certificate = extract_certificate(u, w);
  return dec;
}

Decision decide_irreducible(const TransitionSystem& sys) {
  check_system(sys);
  const PatternUniverse u = build_universe(sys);
  Decision dec;
  dec.method = "pattern-fixpoint";
  dec.holds = true;
  for (int i = 0; i < sys.d && dec.holds; ++i) {
    for (int j = 0; j < sys.d && dec.holds; ++j) {
      const WinSet w = solve(u, [&](const BoolMatrix& b) { return b.get(i, j); });
      if (holds_at_roots(u, w)) {
        dec.pair_certificates.emplace_back(i, j, extract_certificate(u, w));
      } else {
        dec.holds = false;
      }
    }
  }
  if (!dec.holds) dec.pair_certificates.clear();
  return dec;
}

bool verify_cps(const TransitionSystem& sys, const PrefixSet& p, const CpsTarget& target) {
  check_system(sys);
  if (!target.all && (target.i < 0 || target.i >= sys.d || target.j < 0 || target.j >= sys.d))
    raise(ErrorCode::InvalidArgument, "target entry out of range");
  if (p.words.empty()) return false;
  for (const Word& w : p.words) {
    if (w.empty()) return false;  // the empty word never belongs to a CPS
    for (int dir : w)
      if (dir < 0 || dir >= sys.k) raise(ErrorCode::InvalidArgument, "word direction out of range");
  }

  // Trie over the (deduplicated) words.
  struct Node {
    std::vector<int> child;
    bool word = false;
  };
  std::vector<Node> trie(1, Node{std::vector<int>(static_cast<std::size_t>(sys.k), -1), false});
  std::set<Word> unique(p.words.begin(), p.words.end());
  for (const Word& w : unique) {
    int at = 0;
    for (int dir : w) {
      if (trie[static_cast<std::size_t>(at)].word) return false;  // an earlier word is a strict prefix
      int& slot = trie[static_cast<std::size_t>(at)].child[static_cast<std::size_t>(dir)];
      if (slot < 0) {
        slot = static_cast<int>(trie.size());
        trie.push_back(Node{std::vector<int>(static_cast<std::size_t>(sys.k), -1), false});
      }
      at = slot;
    }
    const bool has_children =
        std::any_of(trie[static_cast<std::size_t>(at)].child.begin(),
                    trie[static_cast<std::size_t>(at)].child.end(), [](int c) { return c >= 0; });
    if (has_children) return false;  // this word is a strict prefix of an earlier one
    trie[static_cast<std::size_t>(at)].word = true;
  }
  // Completeness: every internal node carries all k children.
  for (const Node& node : trie) {
    if (node.word) continue;
    for (int c : node.child)
      if (c < 0) return false;
  }

  std::vector<BoolMatrix> gens;
  gens.reserve(static_cast<std::size_t>(sys.k));
  for (const auto& m : sys.matrices) gens.push_back(BoolMatrix::pattern_of(m));
  for (const Word& w : unique) {
    BoolMatrix prod = gens[static_cast<std::size_t>(w.front())];
    for (std::size_t t = 1; t < w.size(); ++t)
      prod = boolean_product(prod, gens[static_cast<std::size_t>(w[t])]);
    if (target.all) {
      if (!prod.all_true()) return false;
    } else if (!prod.get(target.i, target.j)) {
      return false;
    }
  }
  return true;
}

ChaosVerdict classify_chaos(const TransitionSystem& sys) {
  check_system(sys);
  if (decide_irreducible(sys).holds) return {ChaosStatus::Chaotic, "irreducible-sft"};
  if (decide_mixing(sys).holds) return {ChaosStatus::Chaotic, "mixing"};
  for (const auto& m : sys.matrices) {
    for (int i = 0; i < sys.d; ++i) {
      if (m(i, i) == 1 && m.row_sum(i) == 1) return {ChaosStatus::NotChaotic, "diagonal-only-row"};
    }
  }
  return {ChaosStatus::Unknown, "none"};
}

}  // namespace treeshift
