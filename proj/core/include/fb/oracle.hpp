#pragma once

// Brute-force reference implementations. These exist to cross-check the
// production algorithms (tests and `fb analyze --verify`) and avoid sharing
// their nontrivial code paths: words come from a depth-first descent search
// on raw matrices, classes from literal commutations of letters, and
// contractibility from a positional scan of every root sequence.

#include <cstddef>
#include <vector>

#include "fb/coxeter.hpp"
#include "fb/rootseq.hpp"
#include "fb/triples.hpp"

namespace fb::oracle {

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// Every reduced word, by recursively stripping right descents. Sorted.
std::vector<Word> all_reduced_words(const Element& w, std::size_t cap = kDefaultCap);

/// Every word of length l(w) over the generators, filtered by matrix
/// equality. Exponential in l(w); meant for tiny cases.
std::vector<Word> reduced_words_by_exhaustion(const Element& w);

/// The root sequences of all_reduced_words, sorted.
std::vector<RootSequence> all_root_sequences(const Element& w, std::size_t cap = kDefaultCap);

/// Blocks of the partition of all root sequences under commutation of
/// adjacent orthogonal letters, each block sorted, blocks sorted by first
/// member.
std::vector<std::vector<RootSequence>> classes_by_bfs(const Element& w, std::size_t cap = kDefaultCap);

/// Some root sequence shows the three roots consecutively.
bool contractible(const Element& w, const InversionTriple& t, std::size_t cap = kDefaultCap);

/// Inversion triples with contractibility decided by the positional scan.
std::vector<InversionTriple> contractible_triples(const Element& w, std::size_t cap = kDefaultCap);

bool is_freely_braided(const Element& w, std::size_t cap = kDefaultCap);

/// Positive roots by closing the simple roots under reflections. Throws
/// CapExceeded for infinite root systems.
std::vector<Root> positive_roots(const CoxeterGraph& g, std::size_t cap = 100'000);

/// Phi(w) as {r positive : w(r) negative}, sorted. Finite types only.
std::vector<Root> inversion_set(const Element& w, std::size_t cap = 100'000);

/// All inversion triples by scanning pairs of the brute-force inversion set
/// against the full positive root list.
std::vector<InversionTriple> inversion_triples(const Element& w);

}  // namespace fb::oracle
