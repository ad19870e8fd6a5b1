#pragma once

// Root sequences, inversion sets, the heap order, and braid moves.
//
// The root sequence of a reduced word (s_1, ..., s_n) is (r_1, ..., r_n) with
// r_1 = alpha_{s_n} and r_i = s_n ... s_{n-i+2}(alpha_{s_{n-i+1}}). Positions
// are 0-based in this API (r_1 is roots()[0]); the CLI prints them 1-based.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fb/coxeter.hpp"

namespace fb {

class RootSequence {
 public:
  RootSequence() = default;

  /// Validates the roots by un-twisting them into a word; throws
  /// InvalidArgument when they are not the root sequence of a reduced word.
  RootSequence(CoxeterGraph g, std::vector<Root> roots);

  const CoxeterGraph& graph() const noexcept { return graph_; }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  bool empty() const noexcept { return roots_.empty(); }
  const Root& operator[](std::size_t i) const { return roots_[i]; }

  /// The entries in lexicographic order, i.e. the inversion set.
  std::vector<Root> sorted_roots() const;

  friend bool operator==(const RootSequence& a, const RootSequence& b) {
    return a.graph_ == b.graph_ && a.roots_ == b.roots_;
  }
  friend bool operator<(const RootSequence& a, const RootSequence& b) {
    return a.roots_ < b.roots_;
  }

 private:
  struct Unchecked {};
  RootSequence(Unchecked, CoxeterGraph g, std::vector<Root> roots)
      : graph_(std::move(g)), roots_(std::move(roots)) {}

  friend RootSequence root_sequence(const CoxeterGraph&, const Word&);
  friend RootSequence apply_short_move(const RootSequence&, std::size_t);
  friend RootSequence apply_long_move(const RootSequence&, std::size_t);

  CoxeterGraph graph_;
  std::vector<Root> roots_;
};

/// The partial order on Phi(w) generated by a root sequence: r_i < r_j when
/// i < j and <r_i, r_j>_C != 0, closed transitively. Stored over the roots in
/// lexicographic order so that orders from different sequences of the same
/// element compare directly.
class HeapOrder {
 public:
  HeapOrder() = default;

  const std::vector<Root>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }

  /// Index of r in roots(), or size() when absent.
  std::size_t index_of(const Root& r) const;

  bool less_at(std::size_t a, std::size_t b) const { return rel_[a * size() + b]; }
  bool less(const Root& a, const Root& b) const;
  bool comparable(const Root& a, const Root& b) const { return less(a, b) || less(b, a); }

  /// upper covers lower: lower < upper with nothing strictly between.
  bool covers(const Root& upper, const Root& lower) const;

  /// Every related pair (a, b) with a < b, in lexicographic order.
  std::vector<std::pair<Root, Root>> pairs() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const HeapOrder& a, const HeapOrder& b) {
    return a.roots_ == b.roots_ && a.rel_ == b.rel_;
  }

 private:
  friend HeapOrder heap_order(const RootSequence& r);

  std::vector<Root> roots_;
  std::vector<bool> rel_;  // size() x size(), row-major
};

struct HeapOrderHash {
  std::size_t operator()(const HeapOrder& h) const noexcept { return h.hash(); }
};

/// Phi(w), sorted lexicographically.
std::vector<Root> inversion_set(const Element& w);

/// Throws InvalidArgument when w is not reduced.
RootSequence root_sequence(const CoxeterGraph& g, const Word& w);

/// Inverse of root_sequence.
Word word_of_root_sequence(const RootSequence& r);

/// Un-twists raw roots; throws InvalidArgument when some step does not yield
/// a simple root or an entry is not positive.
Word word_of_root_sequence(const CoxeterGraph& g, std::span<const Root> roots);

/// The element a root sequence belongs to.
Element element_of(const RootSequence& r);

HeapOrder heap_order(const RootSequence& r);

/// Positions k with <r_k, r_{k+1}>_C = 0.
std::vector<std::size_t> short_moves(const RootSequence& r);

/// Positions k with r_k + r_{k+2} = r_{k+1}.
std::vector<std::size_t> long_moves(const RootSequence& r);

/// Swaps entries k and k+1; throws InvalidArgument if they are not orthogonal.
RootSequence apply_short_move(const RootSequence& r, std::size_t k);

/// Swaps entries k and k+2; throws InvalidArgument if r_k + r_{k+2} != r_{k+1}.
RootSequence apply_long_move(const RootSequence& r, std::size_t k);

/// Heap-order equality; throws InvalidArgument when the sequences belong to
/// different elements.
bool commutation_equivalent(const RootSequence& a, const RootSequence& b);

}  // namespace fb
