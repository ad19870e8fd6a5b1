#pragma once

// Type A realized as the symmetric group: s_i = (i, i+1), alpha_i = e_i - e_{i+1},
// e_i - e_j in Phi(w) iff i < j and w(i) > w(j).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fb/coxeter.hpp"
#include "fb/triples.hpp"

namespace fb {

class Permutation {
 public:
  /// The identity of S_n.
  static Permutation identity(int n);

  /// Throws InvalidArgument unless one_line is a bijection of 1..n.
  explicit Permutation(std::vector<int> one_line);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  /// w(i) for 1-based i.
  int operator()(int i) const { return one_line_[i - 1]; }
  const std::vector<int>& one_line() const noexcept { return one_line_; }

  std::size_t inversions() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// Digits ("4231") when every value is a single digit, otherwise
/// comma-separated ("10,3,..."). Throws ParseError.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);

/// The A_{n-1} graph (path 1-2-...-(n-1)) for S_n.
CoxeterGraph type_a_graph(int n);

/// Bubble-sort reduced word: repeatedly fix the leftmost descent.
Word reduced_word_of(const Permutation& p);

Element perm_to_element(const Permutation& p);

/// Throws InvalidArgument unless g is the standard path graph of w's rank.
Permutation element_to_perm(const CoxeterGraph& g, const Element& w);

/// e_i - e_j for 1 <= i < j <= n, in simple-root coordinates of A_{n-1}.
Root epsilon_root(int n, int i, int j);

/// One triple per i < j < k with w(i) > w(j) > w(k).
std::vector<InversionTriple> inversion_triples_1line(const Permutation& p);

/// Brute force over index subsets; throws InvalidArgument if the pattern is
/// longer than p.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

/// Avoidance of 3421, 4231, 4312 and 4321.
bool is_freely_braided_perm(const Permutation& p);

struct FreelyBraidedCount {
  int n = 0;
  std::size_t count = 0;
  std::optional<std::vector<Permutation>> members;
};

inline constexpr int kMaxEnumerationRank = 10;

/// Counts freely braided permutations of S_n by the pattern criterion.
/// Throws CapExceeded when n > limit.
FreelyBraidedCount enumerate_freely_braided(int n, bool with_members = false, int limit = kMaxEnumerationRank);

/// All permutations of S_n in lexicographic order of 1-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace fb
