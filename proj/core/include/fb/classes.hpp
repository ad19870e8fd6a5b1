#pragma once

// The signature map from commutation classes to {0,1}^I(w), the class-count
// bound 2^N(w), the commutation graph, parity, and bipartiteness.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fb/enumerate.hpp"
#include "fb/triples.hpp"

namespace fb {

/// A strict total order on roots used as the reference order for signatures.
class Precedence {
 public:
  using Compare = std::function<bool(const Root&, const Root&)>;

  /// Lexicographic order of coefficient vectors.
  static Precedence lex();
  /// Lexicographic order of the reversed coefficient vectors (the last
  /// simple root is most significant).
  static Precedence revlex();
  static Precedence custom(std::string name, Compare precedes);

  /// Parses "lex" or "revlex"; throws ParseError otherwise.
  static Precedence parse(std::string_view name);

  bool precedes(const Root& a, const Root& b) const { return precedes_(a, b); }
  const std::string& name() const noexcept { return name_; }

 private:
  Precedence(std::string name, Compare precedes) : name_(std::move(name)), precedes_(std::move(precedes)) {}

  std::string name_;
  Compare precedes_;
};

/// One bit per contractible triple, aligned with `triples`.
struct FSignature {
  std::vector<InversionTriple> triples;
  std::vector<std::uint8_t> bits;

  /// Bit of t; throws InvalidArgument if t is not in the domain.
  int bit(const InversionTriple& t) const;
  int weight() const;
  std::string to_string() const;

  friend bool operator==(const FSignature&, const FSignature&) = default;
};

/// Bit 0 iff the outer roots of a triple are ordered the same way by the
/// class order and by p. `contractible` must be I(w).
FSignature f_signature(const Element& w, const CommutationClass& c, const Precedence& p,
                       std::span<const InversionTriple> contractible);

/// Computes I(w) first.
FSignature f_signature(const Element& w, const CommutationClass& c, const Precedence& p,
                       const EnumerationOptions& opts = {});

/// (-1)^(number of set bits).
int parity(const FSignature& sig);
int parity(const Element& w, const CommutationClass& c, const Precedence& p,
           const EnumerationOptions& opts = {});

struct BoundReport {
  std::size_t classes = 0;
  std::size_t n_contractible = 0;  // N(w)
  bool bound_holds = false;        // classes <= 2^N(w)
  bool achieves_bound = false;     // classes == 2^N(w)
};

BoundReport count_classes_and_check_bound(const Element& w, const EnumerationOptions& opts = {});

/// The same report from already enumerated classes and I(w).
BoundReport bound_report(std::size_t classes, std::size_t n_contractible);

struct CommutationGraph {
  std::vector<CommutationClass> vertices;
  /// Pairs (i, j) with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Vertices are the classes (sorted by canonical word); {C, C'} is an edge
/// when a member of C and a member of C' differ by one long braid move.
CommutationGraph commutation_graph(const Element& w, const EnumerationOptions& opts = {});

/// The graph from a detailed class enumeration.
CommutationGraph commutation_graph(const Element& w, const ClassEnumeration& enumeration);

struct Bipartition {
  bool bipartite = false;
  /// 0/1 per vertex; meaningful only when bipartite.
  std::vector<int> coloring;
};

Bipartition is_bipartite(const CommutationGraph& g);

/// Plain adjacency-list form, used by is_bipartite.
Bipartition is_bipartite(std::size_t vertices, std::span<const std::pair<std::size_t, std::size_t>> edges);

}  // namespace fb
