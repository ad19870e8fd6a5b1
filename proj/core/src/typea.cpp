#include "fb/typea.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

#include "fb/error.hpp"

namespace fb {

namespace {

const std::array<Permutation, 4>& freely_braided_obstructions() {
  static const std::array<Permutation, 4> patterns{
      Permutation({3, 4, 2, 1}), Permutation({4, 2, 3, 1}), Permutation({4, 3, 1, 2}), Permutation({4, 3, 2, 1})};
  return patterns;
}

bool same_relative_order(const std::vector<int>& values, const std::vector<int>& pattern) {
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b)
      if ((values[a] < values[b]) != (pattern[a] < pattern[b])) return false;
  return true;
}

}  // namespace

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > static_cast<int>(one_line_.size()) || seen[v]) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(one_line_.size()));
    }
    seen[v] = true;
  }
}

std::size_t Permutation::inversions() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    for (std::size_t j = i + 1; j < one_line_.size(); ++j)
      if (one_line_[i] > one_line_[j]) ++count;
  return count;
}

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty permutation");
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("malformed permutation '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      std::string_view item = text.substr(start, comma - start);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw ParseError("malformed permutation entry '" + std::string(item) + "'");
      }
      values.push_back(v);
      start = comma + 1;
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Permutation& p) {
  std::string out;
  const bool digits = p.size() <= 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (!digits && i > 1) out.push_back(',');
    out += std::to_string(p(i));
  }
  return out;
}

CoxeterGraph type_a_graph(int n) {
  if (n < 1) throw InvalidArgument("S_n needs n >= 1");
  return parse_graph("A" + std::to_string(n - 1));
}

Word reduced_word_of(const Permutation& p) {
  std::vector<int> v = p.one_line();
  std::vector<Generator> sorting;
  // v * s_i swaps positions i and i+1; sorting v to the identity with
  // s_{i1}, ..., s_{ik} gives v = s_{ik} ... s_{i1}.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        sorting.push_back(static_cast<Generator>(i + 1));
        changed = true;
        break;
      }
    }
  }
  std::reverse(sorting.begin(), sorting.end());
  return Word(std::move(sorting));
}

Element perm_to_element(const Permutation& p) {
  return element_of(type_a_graph(p.size()), reduced_word_of(p));
}

Permutation element_to_perm(const CoxeterGraph& g, const Element& w) {
  if (!(w.graph() == g) || !g.is_standard_path()) {
    throw InvalidArgument("element_to_perm: expects an element of the standard A_{n-1} graph");
  }
  std::vector<int> v(static_cast<std::size_t>(g.rank()) + 1);
  std::iota(v.begin(), v.end(), 1);
  for (Generator s : w.reduced_word().letters) std::swap(v[s - 1], v[s]);
  return Permutation(std::move(v));
}

Root epsilon_root(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw InvalidArgument("epsilon_root needs 1 <= i < j <= n");
  std::vector<int> c(static_cast<std::size_t>(n) - 1, 0);
  for (int k = i; k < j; ++k) c[k - 1] = 1;
  return Root(std::move(c));
}

std::vector<InversionTriple> inversion_triples_1line(const Permutation& p) {
  const int n = p.size();
  std::vector<InversionTriple> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (p(i) > p(j) && p(j) > p(k)) out.push_back(InversionTriple::of(epsilon_root(n, i, j), epsilon_root(n, j, k)));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  const int n = p.size();
  const int k = pattern.size();
  if (k > n) throw InvalidArgument("pattern longer than permutation");
  if (k == 0) return true;
  // Walk all k-subsets of positions as increasing index vectors.
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> values(k);
  while (true) {
    for (int a = 0; a < k; ++a) values[a] = p.one_line()[idx[a]];
    if (same_relative_order(values, pattern.one_line())) return true;
    int a = k - 1;
    while (a >= 0 && idx[a] == n - k + a) --a;
    if (a < 0) return false;
    ++idx[a];
    for (int b = a + 1; b < k; ++b) idx[b] = idx[b - 1] + 1;
  }
}

bool is_freely_braided_perm(const Permutation& p) {
  if (p.size() < 4) return true;
  for (const Permutation& q : freely_braided_obstructions()) {
    if (contains_pattern(p, q)) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

FreelyBraidedCount enumerate_freely_braided(int n, bool with_members, int limit) {
  if (n < 1) throw InvalidArgument("enumerate_freely_braided needs n >= 1");
  if (n > limit) throw CapExceeded("permutation rank exceeds the enumeration limit", n, limit);
  FreelyBraidedCount out;
  out.n = n;
  if (with_members) out.members.emplace();
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation p(v);
    if (is_freely_braided_perm(p)) {
      ++out.count;
      if (with_members) out.members->push_back(std::move(p));
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace fb
