#include "fb/rootseq.hpp"

#include <algorithm>

#include "fb/error.hpp"

namespace fb {

namespace {

bool sum_equals(const Root& a, const Root& b, const Root& target) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (a[i] + b[i] != target[i]) return false;
  }
  return true;
}

}  // namespace

RootSequence::RootSequence(CoxeterGraph g, std::vector<Root> roots)
    : graph_(std::move(g)), roots_(std::move(roots)) {
  (void)word_of_root_sequence(graph_, roots_);
}

std::vector<Root> RootSequence::sorted_roots() const {
  std::vector<Root> out(roots_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> inversion_set(const Element& w) {
  return root_sequence(w.graph(), w.reduced_word()).sorted_roots();
}

RootSequence root_sequence(const CoxeterGraph& g, const Word& w) {
  check_word(g, w);
  const std::size_t n = w.size();
  std::vector<Root> roots;
  roots.reserve(n);
  // r_i is alpha_{s_{n-i+1}} pushed through s_{n-i+2}, ..., s_n in that order.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pos = n - 1 - i;
    Root r = Root::simple(g.rank(), w[pos]);
    for (std::size_t j = pos + 1; j < n; ++j) r = reflect(g, w[j], r);
    if (!r.is_positive()) {
      throw InvalidArgument("root_sequence: word is not reduced");
    }
    roots.push_back(std::move(r));
  }
  return RootSequence(RootSequence::Unchecked{}, g, std::move(roots));
}

Word word_of_root_sequence(const CoxeterGraph& g, std::span<const Root> roots) {
  const std::size_t n = roots.size();
  std::vector<Generator> reversed;
  reversed.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(roots[i].size()) != g.rank() || !roots[i].is_positive()) {
      throw InvalidArgument("root sequence entry " + std::to_string(i + 1) + " is not a positive root");
    }
    // Undo the letters found so far, s_n first: what remains must be the
    // simple root of the next letter to the left.
    Root v = roots[i];
    for (Generator s : reversed) v = reflect(g, s, v);
    const Generator s = v.simple_index();
    if (s == 0) {
      throw InvalidArgument("not a root sequence: entry " + std::to_string(i + 1) +
                            " does not un-twist to a simple root");
    }
    reversed.push_back(s);
  }
  std::reverse(reversed.begin(), reversed.end());
  return Word(std::move(reversed));
}

Word word_of_root_sequence(const RootSequence& r) {
  return word_of_root_sequence(r.graph(), r.roots());
}

Element element_of(const RootSequence& r) {
  return element_of(r.graph(), word_of_root_sequence(r));
}

std::size_t HeapOrder::index_of(const Root& r) const {
  const auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
  if (it == roots_.end() || !(*it == r)) return roots_.size();
  return static_cast<std::size_t>(it - roots_.begin());
}

bool HeapOrder::less(const Root& a, const Root& b) const {
  const std::size_t i = index_of(a), j = index_of(b);
  if (i == size() || j == size()) throw InvalidArgument("heap order: root not in the inversion set");
  return less_at(i, j);
}

bool HeapOrder::covers(const Root& upper, const Root& lower) const {
  const std::size_t u = index_of(upper), l = index_of(lower);
  if (u == size() || l == size()) throw InvalidArgument("heap order: root not in the inversion set");
  if (!less_at(l, u)) return false;
  for (std::size_t c = 0; c < size(); ++c) {
    if (less_at(l, c) && less_at(c, u)) return false;
  }
  return true;
}

std::vector<std::pair<Root, Root>> HeapOrder::pairs() const {
  std::vector<std::pair<Root, Root>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (less_at(i, j)) out.emplace_back(roots_[i], roots_[j]);
  return out;
}

std::size_t HeapOrder::hash() const noexcept {
  std::size_t h = std::hash<std::vector<bool>>{}(rel_);
  for (const Root& r : roots_) h ^= RootHash{}(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

HeapOrder heap_order(const RootSequence& r) {
  const std::size_t n = r.size();
  const CoxeterGraph& g = r.graph();

  // below[j] holds the positions strictly below position j.
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.pairing(r[i], r[j]) == 0) continue;
      below[j][i] = true;
      for (std::size_t k = 0; k < i; ++k) {
        if (below[i][k]) below[j][k] = true;
      }
    }
  }

  HeapOrder h;
  h.roots_ = r.sorted_roots();
  std::vector<std::size_t> sorted_index(n);
  for (std::size_t p = 0; p < n; ++p) sorted_index[p] = h.index_of(r[p]);
  h.rel_.assign(n * n, false);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (below[j][i]) h.rel_[sorted_index[i] * n + sorted_index[j]] = true;
  return h;
}

std::vector<std::size_t> short_moves(const RootSequence& r) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < r.size(); ++k) {
    if (r.graph().pairing(r[k], r[k + 1]) == 0) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> long_moves(const RootSequence& r) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 2 < r.size(); ++k) {
    if (sum_equals(r[k], r[k + 2], r[k + 1])) out.push_back(k);
  }
  return out;
}

RootSequence apply_short_move(const RootSequence& r, std::size_t k) {
  if (k + 1 >= r.size() || r.graph().pairing(r[k], r[k + 1]) != 0) {
    throw InvalidArgument("no short braid move at position " + std::to_string(k));
  }
  std::vector<Root> roots = r.roots();
  std::swap(roots[k], roots[k + 1]);
  return RootSequence(RootSequence::Unchecked{}, r.graph(), std::move(roots));
}

RootSequence apply_long_move(const RootSequence& r, std::size_t k) {
  if (k + 2 >= r.size() || !sum_equals(r[k], r[k + 2], r[k + 1])) {
    throw InvalidArgument("no long braid move at position " + std::to_string(k));
  }
  std::vector<Root> roots = r.roots();
  std::swap(roots[k], roots[k + 2]);
  return RootSequence(RootSequence::Unchecked{}, r.graph(), std::move(roots));
}

bool commutation_equivalent(const RootSequence& a, const RootSequence& b) {
  if (!(a.graph() == b.graph()) || a.sorted_roots() != b.sorted_roots()) {
    throw InvalidArgument("commutation_equivalent: root sequences belong to different elements");
  }
  return heap_order(a) == heap_order(b);
}

}  // namespace fb
