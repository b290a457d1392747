// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "treeshift/catalog.hpp"
#include "treeshift/topology.hpp"

using namespace treeshift;

namespace {

const std::set<int> kIrreducible{1, 3, 4, 6, 14, 15, 17, 19, 21, 26};
const std::set<int> kMixing{1, 4, 6, 19, 26};

TransitionSystem random_system(std::mt19937& rng, bool force_admissible) {
  std::uniform_int_distribution<int> kd(1, 3), dd(2, 4), bit(0, 1);
  const int k = kd(rng);
  const int d = dd(rng);
  std::vector<Matrix01> mats;
  for (int m = 0; m < k; ++m) {
    Matrix01 mat(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) mat.set(i, j, static_cast<std::uint8_t>(bit(rng)));
    if (force_admissible) {
      std::uniform_int_distribution<int> pick(0, d - 1);
      for (int i = 0; i < d; ++i)
        if (mat.row_sum(i) == 0) mat.set(i, pick(rng), 1);
      for (int j = 0; j < d; ++j)
        if (mat.col_sum(j) == 0) mat.set(pick(rng), j, 1);
    }
    mats.push_back(mat);
  }
  return make_system("", std::move(mats));
}

// Integer matrix product, used as the independent route for pattern checks.
std::vector<std::vector<long long>> int_product(const std::vector<std::vector<long long>>& a,
                                                const std::vector<std::vector<long long>>& b) {
  const std::size_t d = a.size();
  std::vector<std::vector<long long>> c(d, std::vector<long long>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

std::vector<std::vector<long long>> as_int(const Matrix01& m) {
  std::vector<std::vector<long long>> r(static_cast<std::size_t>(m.dim),
                                        std::vector<long long>(static_cast<std::size_t>(m.dim), 0));
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return r;
}

// All complete prefix sets over two directions with words no longer than
// max_len, as word lists.
std::vector<std::vector<Word>> all_binary_cps(int max_len) {
  // Subtree shapes of depth <= depth: either a leaf or two children.
  std::vector<std::vector<std::vector<Word>>> shapes(static_cast<std::size_t>(max_len) + 1);
  shapes[0] = {{{}}};  // a single leaf: the empty relative word
  for (int depth = 1; depth <= max_len; ++depth) {
    shapes[static_cast<std::size_t>(depth)] = {{{}}};
    for (const auto& left : shapes[static_cast<std::size_t>(depth - 1)]) {
      for (const auto& right : shapes[static_cast<std::size_t>(depth - 1)]) {
        std::vector<Word> combined;
        for (const Word& w : left) {
          Word e{0};
          e.insert(e.end(), w.begin(), w.end());
          combined.push_back(e);
        }
        for (const Word& w : right) {
          Word e{1};
          e.insert(e.end(), w.begin(), w.end());
          combined.push_back(e);
        }
        shapes[static_cast<std::size_t>(depth)].push_back(combined);
      }
    }
  }
  // The root must branch, so pair up subtrees of depth max_len - 1.
  std::vector<std::vector<Word>> out;
  for (const auto& left : shapes[static_cast<std::size_t>(max_len - 1)]) {
    for (const auto& right : shapes[static_cast<std::size_t>(max_len - 1)]) {
      std::vector<Word> cps;
      for (const Word& w : left) {
        Word e{0};
        e.insert(e.end(), w.begin(), w.end());
        cps.push_back(e);
      }
      for (const Word& w : right) {
        Word e{1};
        e.insert(e.end(), w.begin(), w.end());
        cps.push_back(e);
      }
      out.push_back(cps);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("matrix irreducibility over the seven catalog matrices") {
  CHECK_FALSE(matrix_irreducible(binary_matrix('B')));
  CHECK_FALSE(matrix_irreducible(binary_matrix('E')));
  CHECK_FALSE(matrix_irreducible(binary_matrix('G')));
  CHECK(matrix_irreducible(binary_matrix('A')));
  CHECK(matrix_irreducible(binary_matrix('C')));
  CHECK(matrix_irreducible(binary_matrix('D')));
  CHECK(matrix_irreducible(binary_matrix('F')));
}

TEST_CASE("matrix primitivity over the seven catalog matrices") {
  CHECK(matrix_primitive(binary_matrix('A')));
  CHECK(matrix_primitive(binary_matrix('D')));
  CHECK(matrix_primitive(binary_matrix('F')));
  CHECK_FALSE(matrix_primitive(binary_matrix('B')));  // identity
  CHECK_FALSE(matrix_primitive(binary_matrix('C')));  // irreducible but periodic
  CHECK_FALSE(matrix_primitive(binary_matrix('E')));
  CHECK_FALSE(matrix_primitive(binary_matrix('G')));
}

TEST_CASE("boolean products match the worked examples") {
  const BoolMatrix d = BoolMatrix::pattern_of(binary_matrix('D'));
  const BoolMatrix f = BoolMatrix::pattern_of(binary_matrix('F'));
  const BoolMatrix df = boolean_product(d, f);
  CHECK(df.get(0, 0));
  CHECK(df.get(0, 1));
  CHECK_FALSE(df.get(1, 0));
  CHECK(df.get(1, 1));
  const BoolMatrix dfd = boolean_product(df, d);
  CHECK(dfd.get(0, 0));
  CHECK(dfd.get(0, 1));
  CHECK(dfd.get(1, 0));
  CHECK_FALSE(dfd.get(1, 1));
  const BoolMatrix id = BoolMatrix::identity(2);
  CHECK(boolean_product(id, f) == f);
  CHECK_THROWS_AS(boolean_product(id, BoolMatrix::identity(3)), Error);
}

TEST_CASE("boolean products carry the positivity pattern of integer products") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 6), len(1, 6), dir(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Matrix01 m0 = binary_matrix(static_cast<char>('A' + letter(rng)));
    const Matrix01 m1 = binary_matrix(static_cast<char>('A' + letter(rng)));
    const Matrix01* mats[2] = {&m0, &m1};
    const int n = len(rng);
    Word word;
    for (int t = 0; t < n; ++t) word.push_back(dir(rng));
    auto ints = as_int(*mats[static_cast<std::size_t>(word[0])]);
    BoolMatrix pattern = BoolMatrix::pattern_of(*mats[static_cast<std::size_t>(word[0])]);
    for (std::size_t t = 1; t < word.size(); ++t) {
      ints = int_product(ints, as_int(*mats[static_cast<std::size_t>(word[t])]));
      pattern = boolean_product(pattern, BoolMatrix::pattern_of(*mats[static_cast<std::size_t>(word[t])]));
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(pattern.get(i, j) == (ints[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0));
  }
}

TEST_CASE("decide_mixing on the worked systems") {
  SUBCASE("X_6 is mixing with the three-word certificate") {
    const Decision dec = decide_mixing(catalog_system(6));
    REQUIRE(dec.holds);
    REQUIRE(dec.certificate.has_value());
    std::vector<Word> words = dec.certificate->words;
    std::sort(words.begin(), words.end());
    CHECK(words == std::vector<Word>{{0}, {1, 0}, {1, 1}});
    CHECK(verify_cps(catalog_system(6), *dec.certificate, CpsTarget::all_entries()));
  }
  SUBCASE("X_21 admits no uniform certificate") {
    CHECK_FALSE(decide_mixing(catalog_system(21)).holds);
  }
  SUBCASE("the full shift stops at depth one") {
    const Decision dec = decide_mixing(catalog_system(1));
    REQUIRE(dec.holds);
    CHECK(dec.certificate->words == std::vector<Word>{{0}, {1}});
  }
}

TEST_CASE("decide_irreducible on the worked systems") {
  SUBCASE("X_3 holds and accepts the textbook certificates") {
    const Decision dec = decide_irreducible(catalog_system(3));
    CHECK(dec.holds);
    CHECK(dec.pair_certificates.size() == 4);
    const PrefixSet depth2{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    const PrefixSet depth1{{{0}, {1}}};
    for (int i = 0; i < 2; ++i) {
      CHECK(verify_cps(catalog_system(3), depth2, CpsTarget::entry(i, i)));
      CHECK(verify_cps(catalog_system(3), depth1, CpsTarget::entry(i, 1 - i)));
    }
  }
  SUBCASE("systems containing B, E or G fail") {
    CHECK_FALSE(decide_irreducible(catalog_system(2)).holds);
    CHECK(decide_irreducible(catalog_system(2)).pair_certificates.empty());
  }
  SUBCASE("X_14 is irreducible but not mixing") {
    CHECK(decide_irreducible(catalog_system(14)).holds);
    CHECK_FALSE(decide_mixing(catalog_system(14)).holds);
  }
}

TEST_CASE("verify_cps checks the prefix set invariants") {
  const TransitionSystem& x6 = catalog_system(6);
  CHECK(verify_cps(x6, PrefixSet{{{0}, {1, 0}, {1, 1}}}, CpsTarget::all_entries()));
  // incomplete: node 1 lacks the child 11
  CHECK_FALSE(verify_cps(x6, PrefixSet{{{0}, {1, 0}}}, CpsTarget::all_entries()));
  CHECK_FALSE(verify_cps(catalog_system(21), PrefixSet{{{0}, {1}}}, CpsTarget::all_entries()));
  // the empty word is never admitted
  CHECK_FALSE(verify_cps(x6, PrefixSet{{{}, {0}, {1}}}, CpsTarget::all_entries()));
  // a word that is a prefix of another
  CHECK_FALSE(verify_cps(x6, PrefixSet{{{0}, {1}, {1, 0}, {1, 1}}}, CpsTarget::all_entries()));
  // empty set
  CHECK_FALSE(verify_cps(x6, PrefixSet{}, CpsTarget::all_entries()));
  // duplicates collapse to a set
  CHECK(verify_cps(catalog_system(1), PrefixSet{{{0}, {0}, {1}}}, CpsTarget::all_entries()));
  CHECK_THROWS_AS(verify_cps(x6, PrefixSet{{{0}, {2}}}, CpsTarget::all_entries()), Error);
  CHECK_THROWS_AS(verify_cps(x6, PrefixSet{{{0}, {1}}}, CpsTarget::entry(0, 5)), Error);
}

TEST_CASE("chaos classification on the worked systems") {
  const ChaosVerdict x4 = classify_chaos(catalog_system(4));
  CHECK(x4.status == ChaosStatus::Chaotic);
  CHECK(x4.evidence == "irreducible-sft");
  const ChaosVerdict x2 = classify_chaos(catalog_system(2));
  CHECK(x2.status == ChaosStatus::NotChaotic);
  CHECK(x2.evidence == "diagonal-only-row");
  CHECK(classify_chaos(catalog_system(15)).status == ChaosStatus::Chaotic);
  CHECK(std::string(to_string(ChaosStatus::NotChaotic)) == "NotChaotic");
}

TEST_CASE("chaos verdict stays Unknown when no sufficient condition applies") {
  // Two powers of a 3-cycle: every word product is a permutation pattern, so
  // neither mixing nor irreducibility can hold, yet no row has its single 1
  // on the diagonal.
  const Matrix01 cycle{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  const Matrix01 cycle2{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const TransitionSystem sys = make_system("", {cycle, cycle2});
  CHECK_FALSE(decide_irreducible(sys).holds);
  CHECK_FALSE(decide_mixing(sys).holds);
  const ChaosVerdict verdict = classify_chaos(sys);
  CHECK(verdict.status == ChaosStatus::Unknown);
  CHECK(verdict.evidence == "none");
}

TEST_CASE("catalog golden table: irreducible, mixing, chaotic") {
  for (int i = 1; i <= 28; ++i) {
    const TransitionSystem& sys = catalog_system(i);
    CHECK_MESSAGE(decide_irreducible(sys).holds == (kIrreducible.count(i) == 1), sys.name);
    CHECK_MESSAGE(decide_mixing(sys).holds == (kMixing.count(i) == 1), sys.name);
    const bool chaotic = classify_chaos(sys).status == ChaosStatus::Chaotic;
    CHECK_MESSAGE(chaotic == (kIrreducible.count(i) == 1), sys.name);
  }
}

TEST_CASE("fixpoint agrees with exhaustive CPS search up to word length 4") {
  const auto cps_list = all_binary_cps(4);
  REQUIRE(cps_list.size() == 676);
  for (int i = 1; i <= 28; ++i) {
    const TransitionSystem& sys = catalog_system(i);
    bool found = false;
    for (const auto& words : cps_list) {
      bool all_positive = true;
      for (const Word& w : words) {
        auto prod = as_int(sys.matrices[static_cast<std::size_t>(w[0])]);
        for (std::size_t t = 1; t < w.size(); ++t)
          prod = int_product(prod, as_int(sys.matrices[static_cast<std::size_t>(w[t])]));
        for (const auto& row : prod)
          for (long long v : row) all_positive = all_positive && v > 0;
        if (!all_positive) break;
      }
      if (all_positive) {
        found = true;
        break;
      }
    }
    // Certificates for the catalog's mixing systems fit in depth 4, so the
    // bounded search decides exactly the same set.
    CHECK_MESSAGE(found == decide_mixing(sys).holds, sys.name);
  }
}

TEST_CASE("property: mixing implies irreducible") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const TransitionSystem sys = random_system(rng, trial % 4 != 0);
    if (decide_mixing(sys).holds) CHECK(decide_irreducible(sys).holds);
  }
}

TEST_CASE("property: single-matrix systems reduce to matrix tests") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> kd(1, 3), dd(2, 4), bit(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = kd(rng);
    const int d = dd(rng);
    Matrix01 mat(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) mat.set(i, j, static_cast<std::uint8_t>(bit(rng)));
    const TransitionSystem sys = make_system("", std::vector<Matrix01>(static_cast<std::size_t>(k), mat));
    CHECK(decide_irreducible(sys).holds == matrix_irreducible(mat));
    CHECK(decide_mixing(sys).holds == matrix_primitive(mat));
  }
}

TEST_CASE("property: irreducibility needs every matrix irreducible") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const TransitionSystem sys = random_system(rng, true);
    if (decide_irreducible(sys).holds)
      for (const auto& m : sys.matrices) CHECK(matrix_irreducible(m));
  }
}

TEST_CASE("property: certificates verify") {
  std::mt19937 rng(19);
  int positives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const TransitionSystem sys = random_system(rng, true);
    const Decision mix = decide_mixing(sys);
    if (mix.holds) {
      ++positives;
      REQUIRE(mix.certificate.has_value());
      CHECK(verify_cps(sys, *mix.certificate, CpsTarget::all_entries()));
    }
    const Decision irr = decide_irreducible(sys);
    if (irr.holds) {
      CHECK(irr.pair_certificates.size() ==
            static_cast<std::size_t>(sys.d) * static_cast<std::size_t>(sys.d));
      for (const auto& [i, j, cps] : irr.pair_certificates)
        CHECK(verify_cps(sys, cps, CpsTarget::entry(i, j)));
    }
  }
  CHECK(positives > 10);  // the sample should include genuinely mixing systems
}
