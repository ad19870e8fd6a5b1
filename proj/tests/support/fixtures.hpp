#pragma once

#include <random>
#include <set>
#include <vector>

#include "fb/fb.hpp"

namespace fb::test {

inline constexpr std::uint32_t kSeed = 20241014;

inline Root R(std::vector<int> c) { return Root(std::move(c)); }

inline CoxeterGraph d4() { return parse_graph("D4"); }

inline Word d4_word() { return Word{2, 1, 3, 4, 2, 4, 3, 1, 2}; }

inline Element d4_element() { return element_of(d4(), d4_word()); }

inline std::vector<Root> d4_sequence() {
  return {R({0, 1, 0, 0}), R({1, 1, 0, 0}), R({0, 1, 1, 0}), R({0, 1, 0, 1}), R({1, 2, 1, 1}),
          R({1, 1, 1, 0}), R({1, 1, 0, 1}), R({0, 1, 1, 1}), R({1, 1, 1, 1})};
}

inline InversionTriple d4_bad_triple() { return InversionTriple::of(R({0, 1, 0, 0}), R({1, 1, 1, 1})); }

inline Word random_word(std::mt19937& rng, int rank, int length) {
  std::uniform_int_distribution<int> letter(1, rank);
  Word w;
  for (int i = 0; i < length; ++i) w.letters.push_back(letter(rng));
  return w;
}

/// Distinct elements whose lengths are drawn uniformly from 0..max_length,
/// grown by random length-increasing letters (capped by the longest element).
inline std::vector<Element> random_elements(const CoxeterGraph& g, std::size_t count, int max_length,
                                            std::uint32_t seed = kSeed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(0, max_length);
  std::vector<Element> out;
  std::set<std::vector<int>> seen;
  for (int attempts = 0; out.size() < count && attempts < 100000; ++attempts) {
    const int target = len(rng);
    Element e(g);
    while (e.length() < target) {
      std::vector<Generator> ascents;
      for (Generator s = 1; s <= g.rank(); ++s)
        if (!is_right_descent(e, s)) ascents.push_back(s);
      if (ascents.empty()) break;
      e = e.times(ascents[std::uniform_int_distribution<std::size_t>(0, ascents.size() - 1)(rng)]);
    }
    if (seen.insert(std::vector<int>(e.matrix().begin(), e.matrix().end())).second) out.push_back(e);
  }
  return out;
}

/// Every element of S_n as an Element of A_{n-1}.
inline std::vector<Element> all_elements_of_sn(int n) {
  std::vector<Element> out;
  for (const Permutation& p : all_permutations(n)) out.push_back(perm_to_element(p));
  return out;
}

inline Element longest_sn(int n) {
  std::vector<int> v;
  for (int i = n; i >= 1; --i) v.push_back(i);
  return perm_to_element(Permutation(v));
}

}  // namespace fb::test
