#pragma once

// Enumeration of reduced words and commutation classes of one element.

#include <cstddef>
#include <vector>

#include "fb/coxeter.hpp"
#include "fb/rootseq.hpp"

namespace fb {

struct EnumerationOptions {
  /// Hard limit on the number of reduced words (equivalently root sequences).
  std::size_t max_words = 1'000'000;
  /// Elements longer than this are refused before any enumeration starts.
  int max_length = 64;
  /// Worker threads used to expand each BFS level; output does not depend on it.
  unsigned threads = 1;
};

/// Words obtained from w by one commutation st -> ts with m(s,t) = 2.
std::vector<Word> short_braid_neighbors(const CoxeterGraph& g, const Word& w);

/// Words obtained from w by one replacement sts -> tst with m(s,t) = 3.
std::vector<Word> long_braid_neighbors(const CoxeterGraph& g, const Word& w);

/// All reduced words of w, sorted lexicographically. Closure under braid
/// relations starting from one reduced word. Throws CapExceeded.
std::vector<Word> enumerate_reduced_words(const Element& w, const EnumerationOptions& opts = {});

struct CommutationClass {
  /// Lexicographically least word of the class and its root sequence.
  Word canonical_word;
  RootSequence canonical;
  std::size_t size = 0;
  /// The order shared by every member.
  HeapOrder order;
};

/// Classes together with the membership of every reduced word.
struct ClassEnumeration {
  std::vector<CommutationClass> classes;
  std::vector<Word> words;             // sorted
  std::vector<std::size_t> class_of;   // parallel to words
};

ClassEnumeration enumerate_classes_detailed(const Element& w, const EnumerationOptions& opts = {});

/// Commutation classes keyed by heap order, sorted by canonical word.
std::vector<CommutationClass> enumerate_classes(const Element& w, const EnumerationOptions& opts = {});

}  // namespace fb
