#pragma once

// Inversion triples {a, a+b, b} of an element, contractibility, N(w), the
// freely-braided predicate, and the consecutive normal form for freely
// braided elements.

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "fb/coxeter.hpp"
#include "fb/enumerate.hpp"
#include "fb/rootseq.hpp"

namespace fb {

/// {low, mid, high} with low + high = mid. The two outer roots are stored
/// with low lexicographically smaller than high.
struct InversionTriple {
  Root low;
  Root mid;
  Root high;

  /// Normalizes the order of the outer roots and computes mid = a + b.
  static InversionTriple of(const Root& a, const Root& b);

  bool contains(const Root& r) const { return r == low || r == mid || r == high; }
  bool shares_root_with(const InversionTriple& other) const;
  std::array<Root, 3> roots() const { return {low, mid, high}; }

  friend auto operator<=>(const InversionTriple&, const InversionTriple&) = default;
  friend bool operator==(const InversionTriple&, const InversionTriple&) = default;
};

/// All inversion triples of w, sorted.
std::vector<InversionTriple> inversion_triples(const Element& w);

enum class ContractibilityMethod {
  /// Heap-order covers, with the type-A shortcut (every triple contractible).
  Auto,
  /// Some class order in which mid covers low or high.
  MidCovers,
  /// Some class order in which low or high covers mid.
  CoveredByMid,
};

/// Throws InvalidArgument if t is not an inversion triple of w.
bool is_contractible(const Element& w, const InversionTriple& t,
                     ContractibilityMethod method = ContractibilityMethod::Auto,
                     const EnumerationOptions& opts = {});

/// The mid-covers test against already enumerated classes of the element.
bool is_contractible(const InversionTriple& t, std::span<const CommutationClass> classes);

/// I(w); N(w) is its size.
std::vector<InversionTriple> contractible_triples(const Element& w,
                                                  ContractibilityMethod method = ContractibilityMethod::Auto,
                                                  const EnumerationOptions& opts = {});

std::vector<InversionTriple> contractible_triples(const Element& w, std::span<const CommutationClass> classes);

bool pairwise_disjoint(std::span<const InversionTriple> triples);

bool is_freely_braided(const Element& w, const EnumerationOptions& opts = {});

/// A sequence commutation equivalent to start in which every contractible
/// triple occupies three consecutive positions, reached by short moves only.
/// Throws InvalidArgument when w is not freely braided or start is not a
/// root sequence of w.
RootSequence consecutive_normal_form(const Element& w, const RootSequence& start,
                                     const EnumerationOptions& opts = {});

/// True when the roots of t sit at three consecutive positions of r.
bool is_consecutive_in(const InversionTriple& t, const RootSequence& r);

}  // namespace fb
