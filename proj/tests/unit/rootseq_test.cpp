#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <set>

#include "fixtures.hpp"

using namespace fb;
using fb::test::R;

namespace {

const CoxeterGraph& a2() {
  static const CoxeterGraph g = parse_graph("A2");
  return g;
}

const CoxeterGraph& a3() {
  static const CoxeterGraph g = parse_graph("A3");
  return g;
}

// All words of length <= max_len over the generators that are reduced.
std::vector<Word> reduced_words_up_to(const CoxeterGraph& g, int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (Generator s = 1; s <= g.rank(); ++s) {
        Word u = w;
        u.letters.push_back(s);
        if (is_reduced(g, u)) next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace

TEST(InversionSet, Examples) {
  EXPECT_TRUE(inversion_set(Element(a2())).empty());
  const auto phi = inversion_set(element_of(a2(), Word{1, 2, 1}));
  EXPECT_EQ(phi, (std::vector<Root>{R({0, 1}), R({1, 0}), R({1, 1})}));
  const Element w0 = element_of(a2(), Word{1, 2, 1});
  for (const Root& r : phi) EXPECT_TRUE(w0.apply(r).is_negative());

  auto expected = test::d4_sequence();
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(inversion_set(test::d4_element()), expected);
}

TEST(RootSequence, Examples) {
  EXPECT_EQ(root_sequence(a2(), Word{1, 2, 1}).roots(), (std::vector<Root>{R({1, 0}), R({1, 1}), R({0, 1})}));
  EXPECT_EQ(root_sequence(test::d4(), test::d4_word()).roots(), test::d4_sequence());
  EXPECT_TRUE(root_sequence(a2(), Word{}).empty());
  EXPECT_THROW(root_sequence(a2(), Word{1, 1}), InvalidArgument);
}

TEST(RootSequence, MatchesDefinitionViaAct) {
  std::mt19937 rng(test::kSeed);
  const CoxeterGraph g = parse_graph("D5");
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = reduce(g, test::random_word(rng, g.rank(), 14));
    const RootSequence r = root_sequence(g, w);
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      // r_{i+1} = s_n ... s_{n-i+1}(alpha_{s_{n-i}}), letters taken from the right end.
      Word acting(std::vector<Generator>(w.letters.rbegin(), w.letters.rbegin() + static_cast<long>(i)));
      const Root x = act(g, acting, Root::simple(g.rank(), w[n - 1 - i]));
      EXPECT_EQ(r[i], x);
    }
    EXPECT_EQ(r.sorted_roots(), inversion_set(element_of(g, w)));
  }
}

TEST(RootSequence, PrefixesAreRootSequences) {
  const RootSequence r = root_sequence(test::d4(), test::d4_word());
  for (std::size_t k = 0; k <= r.size(); ++k) {
    std::vector<Root> prefix(r.roots().begin(), r.roots().begin() + static_cast<long>(k));
    EXPECT_NO_THROW(RootSequence(test::d4(), prefix));
  }
}

TEST(WordOfRootSequence, Examples) {
  EXPECT_EQ(word_of_root_sequence(RootSequence(a2(), {R({1, 0}), R({1, 1}), R({0, 1})})), (Word{1, 2, 1}));
  EXPECT_EQ(word_of_root_sequence(RootSequence(a2(), {})), Word{});
  EXPECT_EQ(word_of_root_sequence(RootSequence(test::d4(), test::d4_sequence())), test::d4_word());
}

TEST(WordOfRootSequence, RejectsInvalid) {
  EXPECT_THROW(RootSequence(a2(), {R({1, 1})}), InvalidArgument);
  EXPECT_THROW(RootSequence(a2(), {R({1, 0}), R({1, 0})}), InvalidArgument);
  EXPECT_THROW(RootSequence(a2(), {R({1, 0}), R({0, 1}), R({1, 1})}), InvalidArgument);
  EXPECT_THROW(RootSequence(a2(), {R({-1, 0})}), InvalidArgument);
}

TEST(WordOfRootSequence, BijectionA3AndD4) {
  for (const CoxeterGraph& g : {a3(), test::d4()}) {
    for (const Word& w : reduced_words_up_to(g, 8)) {
      const RootSequence r = root_sequence(g, w);
      EXPECT_EQ(word_of_root_sequence(r), w);
      EXPECT_EQ(root_sequence(g, word_of_root_sequence(r)), r);
      EXPECT_EQ(element_of(r), element_of(g, w));
    }
  }
}

TEST(HeapOrder, Examples) {
  const RootSequence r = root_sequence(a2(), Word{1, 2, 1});
  const HeapOrder h = heap_order(r);
  EXPECT_TRUE(h.less(R({1, 0}), R({1, 1})));
  EXPECT_TRUE(h.less(R({1, 1}), R({0, 1})));
  EXPECT_TRUE(h.less(R({1, 0}), R({0, 1})));
  EXPECT_FALSE(h.less(R({0, 1}), R({1, 0})));
  EXPECT_EQ(h.pairs().size(), 3u);

  const RootSequence r13 = root_sequence(a3(), Word{1, 3});
  EXPECT_EQ(r13.roots(), (std::vector<Root>{R({0, 0, 1}), R({1, 0, 0})}));
  EXPECT_TRUE(heap_order(r13).pairs().empty());
  EXPECT_EQ(heap_order(RootSequence(a2(), {})).size(), 0u);
}

TEST(HeapOrder, IsAPartialOrderContainingNonorthogonalPairs) {
  const CoxeterGraph g = test::d4();
  for (const Element& w : test::random_elements(g, 40, 12)) {
    for (const RootSequence& r : oracle::all_root_sequences(w)) {
      const HeapOrder h = heap_order(r);
      const std::size_t n = h.size();
      for (std::size_t a = 0; a < n; ++a) {
        EXPECT_FALSE(h.less_at(a, a));
        for (std::size_t b = 0; b < n; ++b) {
          if (h.less_at(a, b)) EXPECT_FALSE(h.less_at(b, a));
          for (std::size_t c = 0; c < n; ++c)
            if (h.less_at(a, b) && h.less_at(b, c)) EXPECT_TRUE(h.less_at(a, c));
          if (a != b && g.pairing(h.roots()[a], h.roots()[b]) != 0) EXPECT_TRUE(h.comparable(h.roots()[a], h.roots()[b]));
        }
      }
    }
  }
}

TEST(ShortMoves, Examples) {
  EXPECT_TRUE(short_moves(root_sequence(a2(), Word{1, 2, 1})).empty());
  EXPECT_EQ(short_moves(root_sequence(a3(), Word{1, 3})), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(short_moves(RootSequence(a2(), {})).empty());
}

TEST(LongMoves, Examples) {
  EXPECT_EQ(long_moves(root_sequence(a2(), Word{1, 2, 1})), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(long_moves(root_sequence(a3(), Word{1, 3})).empty());
}

TEST(LongMoves, D4NoSequenceShowsBadTripleConsecutively) {
  const InversionTriple t = test::d4_bad_triple();
  for (const RootSequence& r : oracle::all_root_sequences(test::d4_element())) {
    EXPECT_FALSE(is_consecutive_in(t, r));
    for (std::size_t k : long_moves(r)) {
      std::set<Root> window{r[k], r[k + 1], r[k + 2]};
      EXPECT_NE(window, (std::set<Root>{t.low, t.mid, t.high}));
    }
  }
}

TEST(ApplyShortMove, Examples) {
  const RootSequence r = root_sequence(a3(), Word{1, 3});
  const RootSequence s = apply_short_move(r, 0);
  EXPECT_EQ(s.roots(), (std::vector<Root>{R({1, 0, 0}), R({0, 0, 1})}));
  EXPECT_EQ(apply_short_move(s, 0), r);
  EXPECT_THROW(apply_short_move(root_sequence(a2(), Word{1, 2, 1}), 0), InvalidArgument);
  EXPECT_THROW(apply_short_move(r, 1), InvalidArgument);
}

TEST(ApplyLongMove, Examples) {
  const RootSequence r = root_sequence(a2(), Word{1, 2, 1});
  const RootSequence s = apply_long_move(r, 0);
  EXPECT_EQ(s.roots(), (std::vector<Root>{R({0, 1}), R({1, 1}), R({1, 0})}));
  EXPECT_EQ(s[1], r[1]);
  EXPECT_EQ(word_of_root_sequence(s), (Word{2, 1, 2}));
  EXPECT_EQ(apply_long_move(s, 0), r);
  EXPECT_THROW(apply_long_move(root_sequence(a3(), Word{1, 3}), 0), InvalidArgument);
}

// Moves on sequences coincide with braid relations on the corresponding words.
TEST(Moves, MatchWordLevelBraidRelations) {
  for (const CoxeterGraph& g : {a3(), test::d4()}) {
    for (const Word& w : reduced_words_up_to(g, 8)) {
      const RootSequence r = root_sequence(g, w);
      const std::size_t n = w.size();

      std::set<std::size_t> word_short, word_long;
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (w[i] != w[i + 1] && g.m(w[i], w[i + 1]) == 2) word_short.insert(i);
      for (std::size_t i = 0; i + 2 < n; ++i)
        if (w[i] == w[i + 2] && g.m(w[i], w[i + 1]) == 3) word_long.insert(i);

      // Sequence position k corresponds to word letters n-2-k, n-1-k (short)
      // and n-3-k .. n-1-k (long).
      std::set<std::size_t> seq_short, seq_long;
      for (std::size_t k : short_moves(r)) seq_short.insert(n - 2 - k);
      for (std::size_t k : long_moves(r)) seq_long.insert(n - 3 - k);
      EXPECT_EQ(seq_short, word_short) << to_string(w);
      EXPECT_EQ(seq_long, word_long) << to_string(w);

      for (std::size_t k : short_moves(r)) {
        Word u = w;
        std::swap(u.letters[n - 2 - k], u.letters[n - 1 - k]);
        EXPECT_EQ(word_of_root_sequence(apply_short_move(r, k)), u);
      }
      for (std::size_t k : long_moves(r)) {
        Word u = w;
        const std::size_t i = n - 3 - k;
        u.letters[i] = u.letters[i + 2] = w[i + 1];
        u.letters[i + 1] = w[i];
        EXPECT_EQ(word_of_root_sequence(apply_long_move(r, k)), u);
      }
    }
  }
}

TEST(CommutationEquivalent, Examples) {
  const RootSequence r = root_sequence(a2(), Word{1, 2, 1});
  EXPECT_TRUE(commutation_equivalent(r, r));
  EXPECT_FALSE(commutation_equivalent(r, root_sequence(a2(), Word{2, 1, 2})));
  EXPECT_TRUE(commutation_equivalent(root_sequence(a3(), Word{1, 3}), root_sequence(a3(), Word{3, 1})));
  EXPECT_THROW(commutation_equivalent(root_sequence(a3(), Word{1, 3}), root_sequence(a3(), Word{1})),
               InvalidArgument);
}

TEST(CommutationEquivalent, AgreesWithShortMoveClosureOnS4) {
  for (const Element& w : test::all_elements_of_sn(4)) {
    const auto seqs = oracle::all_root_sequences(w);
    // Independent closure under apply_short_move.
    std::map<RootSequence, int> block;
    int next = 0;
    for (const RootSequence& seed : seqs) {
      if (block.count(seed)) continue;
      std::queue<RootSequence> q;
      q.push(seed);
      block[seed] = next;
      while (!q.empty()) {
        const RootSequence cur = q.front();
        q.pop();
        for (std::size_t k : short_moves(cur)) {
          RootSequence nb = apply_short_move(cur, k);
          if (block.emplace(nb, next).second) q.push(nb);
        }
      }
      ++next;
    }
    for (const RootSequence& a : seqs)
      for (const RootSequence& b : seqs) EXPECT_EQ(commutation_equivalent(a, b), block[a] == block[b]);
  }
}

TEST(BraidClosure, ReachesAllReducedWords) {
  for (const Element& w : test::all_elements_of_sn(4)) {
    const auto words = oracle::all_reduced_words(w);
    const RootSequence start = root_sequence(w.graph(), words.back());
    std::set<RootSequence> seen{start};
    std::queue<RootSequence> q;
    q.push(start);
    while (!q.empty()) {
      const RootSequence cur = q.front();
      q.pop();
      for (std::size_t k : short_moves(cur))
        if (auto nb = apply_short_move(cur, k); seen.insert(nb).second) q.push(nb);
      for (std::size_t k : long_moves(cur))
        if (auto nb = apply_long_move(cur, k); seen.insert(nb).second) q.push(nb);
    }
    std::set<Word> reached;
    for (const RootSequence& r : seen) reached.insert(word_of_root_sequence(r));
    EXPECT_EQ(std::vector<Word>(reached.begin(), reached.end()), enumerate_reduced_words(w));
  }
}

TEST(TripleOrder, MidLiesBetweenOuterRootsOnS4) {
  for (const Element& w : test::all_elements_of_sn(4)) {
    const auto triples = inversion_triples(w);
    for (const RootSequence& r : oracle::all_root_sequences(w)) {
      std::map<Root, std::size_t> pos;
      for (std::size_t i = 0; i < r.size(); ++i) pos[r[i]] = i;
      for (const InversionTriple& t : triples) {
        const auto [lo, hi] = std::minmax(pos[t.low], pos[t.high]);
        EXPECT_LT(lo, pos[t.mid]);
        EXPECT_LT(pos[t.mid], hi);
      }
    }
  }
}
