#pragma once

// Simply laced Coxeter systems with exact integer root arithmetic.
//
// Generators are numbered 1..rank. Roots are integer coefficient vectors over
// the simple roots, and the bilinear form used throughout is the symmetrized
// Cartan matrix C (C[s][s] = 2, C[s][t] = -1 on edges, 0 otherwise), which is
// twice the usual Coxeter form. Group elements are stored as their integer
// matrix on the root lattice, so equality and hashing are exact.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fb {

using Generator = int;

class Root;

class CoxeterGraph {
 public:
  using Edge = std::pair<Generator, Generator>;

  /// The rank-0 graph (trivial group).
  CoxeterGraph();

  /// Edges are unordered pairs with m(s,t) = 3. Throws InvalidArgument on
  /// self-loops, duplicate edges, or endpoints outside 1..rank.
  CoxeterGraph(int rank, std::vector<Edge> edges, std::string name = {});

  int rank() const noexcept { return data_->rank; }

  /// Edges normalized as (min, max) and sorted.
  const std::vector<Edge>& edges() const noexcept { return data_->edges; }

  const std::string& name() const noexcept { return data_->name; }

  bool valid_generator(Generator s) const noexcept {
    return s >= 1 && s <= data_->rank;
  }

  /// Coxeter matrix entry: 1 on the diagonal, 3 on edges, 2 otherwise.
  int m(Generator s, Generator t) const;

  /// Symmetrized Cartan matrix entry C[s][t].
  int cartan(Generator s, Generator t) const;

  bool adjacent(Generator s, Generator t) const { return m(s, t) == 3; }

  /// <a, b>_C = a^T C b.
  int pairing(const Root& a, const Root& b) const;

  /// <r, alpha_s>_C, the coefficient used by the simple reflection s.
  int pairing_with_simple(const Root& r, Generator s) const;

  /// True when every connected component is a path, i.e. the group is a
  /// product of symmetric groups.
  bool is_type_a_forest() const;

  /// True when the graph is exactly the path 1-2-...-rank.
  bool is_standard_path() const;

  /// Same rank and edge set; the display name is ignored.
  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.data_ == b.data_ ||
           (a.data_->rank == b.data_->rank && a.data_->edges == b.data_->edges);
  }

 private:
  struct Data {
    int rank = 0;
    std::vector<Edge> edges;
    std::vector<int> cartan;  // row-major rank x rank
    std::string name;
  };
  std::shared_ptr<const Data> data_;
};

/// Parses "A<k>", "D<k>" (k >= 4, branch node 2 adjacent to 1, 3 and 4, then
/// the chain 4-5-...-k), "E6"/"E7"/"E8" (Bourbaki labels), or an explicit
/// edge list such as "1-2,2-3,2-4" (rank = largest index). Throws ParseError.
CoxeterGraph parse_graph(std::string_view input);

/// A real root: a nonzero integer vector whose nonzero coordinates share a
/// sign. The constructor enforces the sign pattern, not membership in Phi.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs);

  static Root simple(int rank, Generator s);

  std::span<const int> coeffs() const noexcept { return coeffs_; }
  int operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  bool is_positive() const noexcept;
  bool is_negative() const noexcept { return !coeffs_.empty() && !is_positive(); }

  /// Sum of coefficients.
  int height() const noexcept;

  /// Index of the simple root this is, or 0 when not simple.
  Generator simple_index() const noexcept;

  Root operator-() const;
  Root operator+(const Root& other) const;

  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;

 private:
  std::vector<int> coeffs_;
};

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

/// A word over the generators. The empty word represents the identity.
struct Word {
  std::vector<Generator> letters;

  Word() = default;
  Word(std::initializer_list<Generator> init) : letters(init) {}
  explicit Word(std::vector<Generator> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Generator operator[](std::size_t i) const { return letters[i]; }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Whitespace- or comma-separated generator indices, e.g. "2 1 3 4 2".
Word parse_word(std::string_view text);

/// Throws InvalidArgument if some letter is outside 1..rank.
void check_word(const CoxeterGraph& g, const Word& w);

/// A group element, represented by its exact action on the root lattice.
/// Column j of the matrix is w(alpha_{j+1}) in simple-root coordinates.
class Element {
 public:
  /// Identity of the group of g.
  explicit Element(CoxeterGraph g);

  const CoxeterGraph& graph() const noexcept { return graph_; }
  int rank() const noexcept { return graph_.rank(); }
  int length() const noexcept { return length_; }

  /// Row-major rank x rank matrix.
  std::span<const int> matrix() const noexcept { return matrix_; }
  int entry(int row, int col) const { return matrix_[row * rank() + col]; }

  bool is_identity() const noexcept { return length_ == 0; }

  Root apply(const Root& r) const;

  /// The image w(alpha_s), i.e. column s.
  Root image_of_simple(Generator s) const;

  /// w * s.
  Element times(Generator s) const;

  Element operator*(const Element& other) const;
  Element inverse() const;

  /// Reduced word obtained by repeatedly stripping the smallest right
  /// descent; a canonical representative of the element.
  Word reduced_word() const;

  /// Bits of the matrix, useful for hashing.
  std::size_t hash() const noexcept;

  friend bool operator==(const Element& a, const Element& b) {
    return a.graph_ == b.graph_ && a.matrix_ == b.matrix_;
  }

 private:
  Element(CoxeterGraph g, std::vector<int> matrix, int length);
  static int peel_length(const CoxeterGraph& g, std::vector<int> matrix);

  friend Element element_of(const CoxeterGraph& g, const Word& w);

  CoxeterGraph graph_;
  std::vector<int> matrix_;
  int length_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

/// s(r) = r - <r, alpha_s>_C alpha_s.
Root reflect(const CoxeterGraph& g, Generator s, const Root& r);

/// Left action of the product of the letters; the rightmost letter acts first.
Root act(const CoxeterGraph& g, const Word& w, const Root& r);

/// The image of w under S* -> W, with its length.
Element element_of(const CoxeterGraph& g, const Word& w);

/// True iff w(alpha_s) is negative.
bool is_right_descent(const Element& w, Generator s);

/// A reduced word for the same element, built letter by letter with the
/// exchange condition (leftmost deletion when a letter cancels).
Word reduce(const CoxeterGraph& g, const Word& w);

bool is_reduced(const CoxeterGraph& g, const Word& w);

}  // namespace fb
