// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. All comparisons are exact integer or set
// equalities; the only numeric limits are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"

using namespace fb;
using fb::test::R;

namespace {

// Wall-clock budgets in seconds, one per criterion.
constexpr double kBudget1 = 10;
constexpr double kBudget2 = 120;
constexpr double kBudget3 = 120;
constexpr double kBudget4 = 120;
constexpr double kBudget5 = 30;
constexpr double kBudget6 = 120;
constexpr double kBudget7 = 180;
constexpr double kBudget8 = 120;
constexpr double kBudget9 = 60;
constexpr double kBudget10 = 60;
constexpr double kBudget11 = 300;

constexpr int kS6Samples = 200;
constexpr std::size_t kD4Samples = 50;
constexpr int kD4MaxLength = 12;
constexpr int kBijectionD4MaxLength = 9;
constexpr std::size_t kExploratorySamples = 50;
constexpr int kExploratoryMaxLength = 12;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// Heap-order partition as sorted blocks of root sequences.
std::vector<std::vector<RootSequence>> heap_partition(const Element& w) {
  const ClassEnumeration e = enumerate_classes_detailed(w);
  std::vector<std::vector<RootSequence>> blocks(e.classes.size());
  for (std::size_t i = 0; i < e.words.size(); ++i) blocks[e.class_of[i]].push_back(root_sequence(w.graph(), e.words[i]));
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return blocks;
}

void golden_d4(Outcome& o) {
  const CoxeterGraph g = test::d4();
  const Element w = test::d4_element();
  o.require(root_sequence(g, test::d4_word()).roots() == test::d4_sequence(), "root sequence");

  const auto phi = inversion_set(w);
  std::vector<Generator> simple;
  for (const Root& r : phi)
    if (r.simple_index() != 0) simple.push_back(r.simple_index());
  o.require(simple == std::vector<Generator>{2}, "a2 is the only simple root in the inversion set");

  const InversionTriple bad = test::d4_bad_triple();
  std::vector<InversionTriple> containing;
  for (const InversionTriple& t : inversion_triples(w))
    if (t.contains(R({0, 1, 0, 0}))) containing.push_back(t);
  o.require(containing == std::vector<InversionTriple>{bad}, "unique triple through a2");
  o.require(!is_contractible(w, bad), "production says not contractible");
  o.require(!oracle::contractible(w, bad), "oracle says not contractible");

  const auto words = oracle::all_reduced_words(w);
  o.require(words == enumerate_reduced_words(w), "full reduced-word set");
  o.detail << "length " << w.length() << ", " << words.size() << " reduced words, " << inversion_triples(w).size()
           << " triples";
}

void bound_and_converse(Outcome& o) {
  std::size_t free = 0, equal = 0;
  for (const Permutation& p : all_permutations(5)) {
    const Element w = perm_to_element(p);
    const BoundReport r = count_classes_and_check_bound(w);
    const bool fb = is_freely_braided(w);
    const std::size_t bound = std::size_t{1} << r.n_contractible;
    o.require(r.classes <= bound, "classes <= 2^N for " + to_string(p));
    o.require((r.classes == bound) == fb, "equality iff freely braided for " + to_string(p));
    free += fb;
    equal += r.classes == bound;
  }
  o.detail << "120 elements, " << free << " freely braided, " << equal << " attain 2^N";
}

void pattern_criterion(Outcome& o) {
  std::size_t checked = 0;
  for (const Permutation& p : all_permutations(5)) {
    o.require(is_freely_braided_perm(p) == is_freely_braided(perm_to_element(p)), to_string(p));
    ++checked;
  }
  std::mt19937 rng(test::kSeed);
  std::vector<int> v{1, 2, 3, 4, 5, 6};
  for (int i = 0; i < kS6Samples; ++i) {
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation p(v);
    o.require(is_freely_braided_perm(p) == is_freely_braided(perm_to_element(p)), to_string(p));
    ++checked;
  }
  o.detail << checked << " permutations (S5 exhaustive + " << kS6Samples << " from S6)";
}

void type_a_contractible(Outcome& o) {
  std::size_t triples = 0;
  for (const Permutation& p : all_permutations(5)) {
    const Element w = perm_to_element(p);
    const auto classes = enumerate_classes(w);
    for (const InversionTriple& t : inversion_triples(w)) {
      o.require(is_contractible(w, t, ContractibilityMethod::MidCovers), "production " + to_string(p));
      o.require(is_contractible(t, classes), "class sweep " + to_string(p));
      o.require(oracle::contractible(w, t), "oracle " + to_string(p));
      ++triples;
    }
  }
  o.detail << triples << " triples over S5";
}

void heap_vs_bfs(Outcome& o) {
  std::size_t classes = 0;
  for (const Permutation& p : all_permutations(4)) {
    const Element w = perm_to_element(p);
    const auto heap = heap_partition(w);
    o.require(heap == oracle::classes_by_bfs(w), to_string(p));
    classes += heap.size();
  }
  o.detail << "24 elements, " << classes << " classes in total";
}

void injectivity(Outcome& o) {
  std::size_t classes = 0;
  for (const Precedence& prec : {Precedence::lex(), Precedence::revlex()}) {
    for (const Permutation& p : all_permutations(5)) {
      const Element w = perm_to_element(p);
      const auto cls = enumerate_classes(w);
      const auto triples = contractible_triples(w, cls);
      std::set<std::vector<std::uint8_t>> seen;
      for (const CommutationClass& c : cls) seen.insert(f_signature(w, c, prec, triples).bits);
      o.require(seen.size() == cls.size(), prec.name() + " " + to_string(p));
      classes += cls.size();
    }
  }
  o.detail << classes << " class signatures checked under lex and revlex";
}

void check_graph(Outcome& o, const Element& w, const std::string& label, std::size_t& edges) {
  const ClassEnumeration e = enumerate_classes_detailed(w);
  const CommutationGraph g = commutation_graph(w, e);
  const Bipartition b = is_bipartite(g);
  o.require(b.bipartite, "bipartite " + label);
  const auto triples = contractible_triples(w, e.classes);
  std::vector<FSignature> sig;
  for (const CommutationClass& c : g.vertices) sig.push_back(f_signature(w, c, Precedence::lex(), triples));
  for (const auto& [x, y] : g.edges) {
    std::size_t diff = 0;
    for (std::size_t k = 0; k < triples.size(); ++k) diff += sig[x].bits[k] != sig[y].bits[k];
    o.require(diff == 1, "one bit per edge " + label);
    o.require(parity(sig[x]) != parity(sig[y]), "parity coloring " + label);
  }
  edges += g.edges.size();
}

void bipartite_graphs(Outcome& o) {
  std::size_t edges = 0;
  for (const Permutation& p : all_permutations(5)) check_graph(o, perm_to_element(p), to_string(p), edges);
  const auto d4 = test::random_elements(test::d4(), kD4Samples, kD4MaxLength, test::kSeed + 7);
  o.require(d4.size() == kD4Samples, "enough D4 samples");
  for (const Element& w : d4) check_graph(o, w, "D4 " + to_string(w.reduced_word()), edges);
  o.detail << "120 + " << d4.size() << " graphs, " << edges << " edges";
}

void normal_form(Outcome& o) {
  std::size_t elements = 0, starts = 0;
  for (const Permutation& p : all_permutations(5)) {
    const Element w = perm_to_element(p);
    if (!is_freely_braided(w)) continue;
    ++elements;
    const auto triples = contractible_triples(w);
    for (const RootSequence& start : oracle::all_root_sequences(w)) {
      const RootSequence out = consecutive_normal_form(w, start);
      o.require(heap_order(out) == heap_order(start), "same class " + to_string(p));
      for (const InversionTriple& t : triples) o.require(is_consecutive_in(t, out), "consecutive " + to_string(p));
      ++starts;
    }
  }
  o.detail << elements << " freely braided elements, " << starts << " starting sequences";
}

void fan_stembridge(Outcome& o) {
  const Permutation p321 = parse_permutation("321");
  std::size_t fc = 0;
  for (const Permutation& p : all_permutations(5)) {
    const Element w = perm_to_element(p);
    const bool no_triples = inversion_triples(w).empty();
    const bool one_class = enumerate_classes(w).size() == 1;
    const bool avoids = !contains_pattern(p, p321);
    o.require(no_triples == one_class && one_class == avoids, to_string(p));
    fc += avoids;
  }
  o.detail << fc << " fully commutative elements of S5";
}

void bijection(Outcome& o) {
  std::size_t words = 0;
  auto roundtrip = [&](const Element& w, const std::string& label) {
    for (const Word& u : enumerate_reduced_words(w)) {
      const RootSequence r = root_sequence(w.graph(), u);
      o.require(word_of_root_sequence(r) == u, "word roundtrip " + label);
      o.require(RootSequence(w.graph(), r.roots()) == r, "sequence roundtrip " + label);
      ++words;
    }
  };
  for (const Permutation& p : all_permutations(4)) roundtrip(perm_to_element(p), to_string(p));
  const auto d4 = test::random_elements(test::d4(), kD4Samples, kBijectionD4MaxLength, test::kSeed + 9);
  o.require(d4.size() == kD4Samples, "enough D4 samples");
  for (const Element& w : d4) roundtrip(w, "D4 " + to_string(w.reduced_word()));
  o.detail << words << " reduced words";
}

void exploratory_converse(Outcome& o) {
  std::mt19937 rng(test::kSeed + 13);
  std::size_t found = 0, free = 0, attempts = 0, skipped = 0;
  std::vector<std::string> counterexamples;
  std::set<std::pair<std::string, std::vector<int>>> seen;
  const CoxeterGraph graphs[] = {parse_graph("D4"), parse_graph("D5")};
  std::uniform_int_distribution<int> len(1, kExploratoryMaxLength);
  while (found < kExploratorySamples && attempts < 20000) {
    ++attempts;
    const CoxeterGraph& g = graphs[attempts % 2];
    const Element w = element_of(g, test::random_word(rng, g.rank(), len(rng)));
    if (!seen.insert({g.name(), std::vector<int>(w.matrix().begin(), w.matrix().end())}).second) continue;
    try {
      const BoundReport r = count_classes_and_check_bound(w);
      if (!r.achieves_bound || r.n_contractible == 0) continue;
      ++found;
      if (is_freely_braided(w)) {
        ++free;
      } else {
        counterexamples.push_back(g.name() + ": " + to_string(w.reduced_word()));
      }
    } catch (const CapExceeded&) {
      ++skipped;
    }
  }
  o.detail << found << " elements with classes = 2^N (N > 0), " << free << " freely braided";
  if (skipped) o.detail << ", " << skipped << " skipped at the enumeration cap";
  for (const std::string& c : counterexamples) std::cout << "  !!! COUNTEREXAMPLE (not freely braided): " << c << "\n";
  o.require(found == kExploratorySamples, "enough samples");
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "D4 golden example", kBudget1, golden_d4},
      {2, "S5 class bound and equality iff freely braided", kBudget2, bound_and_converse},
      {3, "pattern criterion vs generic predicate", kBudget3, pattern_criterion},
      {4, "every S5 triple contractible", kBudget4, type_a_contractible},
      {5, "S4 heap-order partition equals BFS partition", kBudget5, heap_vs_bfs},
      {6, "signature injectivity under lex and revlex", kBudget6, injectivity},
      {7, "commutation graphs bipartite, edges flip one bit", kBudget7, bipartite_graphs},
      {8, "consecutive normal form", kBudget8, normal_form},
      {9, "no triples iff one class iff 321-avoiding", kBudget9, fan_stembridge},
      {10, "root sequence / word bijection", kBudget10, bijection},
      {11, "exploratory: classes = 2^N in D4/D5 (report only)", kBudget11, exploratory_converse},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.budget, "over time budget");
    if (!o.pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.budget);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << timing << ") "
              << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
