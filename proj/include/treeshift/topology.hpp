// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "treeshift/bool_matrix.hpp"
#include "treeshift/types.hpp"

namespace treeshift {

// A finite complete prefix set: nonempty words over {0,...,k-1}, no word a
// prefix of another, and every internal node of the word trie has all k
// children present.
struct PrefixSet {
  std::vector<Word> words;
};

// Leaf condition for a CPS certificate: either every entry of the word
// product pattern must be positive, or one fixed entry (i, j).
struct CpsTarget {
  bool all = true;
  int i = 0;
  int j = 0;

  static CpsTarget all_entries() { return CpsTarget{}; }
  static CpsTarget entry(int i, int j) { return CpsTarget{false, i, j}; }
};

struct Decision {
  bool holds = false;
  std::string method;
  // Certificate CPS when a mixing decision holds.
  std::optional<PrefixSet> certificate;
  // Per-pair certificates (i, j, CPS) when an irreducibility decision holds.
  std::vector<std::tuple<int, int, PrefixSet>> pair_certificates;
};

enum class ChaosStatus { Chaotic, NotChaotic, Unknown };

struct ChaosVerdict {
  ChaosStatus status = ChaosStatus::Unknown;
  std::string evidence;  // "irreducible-sft", "mixing", "diagonal-only-row", "none"
};

const char* to_string(ChaosStatus s);

// True iff the digraph with an edge i->j whenever m(i,j) = 1 is strongly
// connected.
bool matrix_irreducible(const Matrix01& m);

// True iff some boolean power of m is entrywise positive; powers are checked
// up to the Wielandt bound d^2 - 2d + 2.
bool matrix_primitive(const Matrix01& m);

// Exact decision of the uniform CPS condition: does a complete prefix set P
// of nonempty words exist with the pattern of A_x entrywise positive for
// every x in P? Solved as a least fixpoint over the finite set of patterns
// reachable from the generators by right multiplication; on success a
// minimal-depth certificate is extracted.
Decision decide_mixing(const TransitionSystem& sys);

// Same fixpoint with leaf condition "entry (i,j) positive", required for every
// pair (i, j).
Decision decide_irreducible(const TransitionSystem& sys);

// Checks the PrefixSet invariants and the positivity target on every word.
// Throws on words containing a direction >= k.
bool verify_cps(const TransitionSystem& sys, const PrefixSet& p, const CpsTarget& target);

// Sufficient conditions only: irreducible or mixing implies chaotic; a matrix
// row whose single 1 sits on the diagonal pins a non-dense tail and rules
// chaos out; anything else stays Unknown.
ChaosVerdict classify_chaos(const TransitionSystem& sys);

}  // namespace treeshift
