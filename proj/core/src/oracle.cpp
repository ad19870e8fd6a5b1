#include "fb/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "fb/error.hpp"

namespace fb::oracle {

namespace {

using Matrix = std::vector<int>;

Matrix to_matrix(const Element& w) { return Matrix(w.matrix().begin(), w.matrix().end()); }

// Dense product with the matrix of the simple reflection s.
Matrix times_reflection(const CoxeterGraph& g, const Matrix& m, Generator s) {
  const int n = g.rank();
  Matrix refl(static_cast<std::size_t>(n) * n, 0);
  for (int t = 0; t < n; ++t) {
    refl[t * n + t] = 1;
    refl[(s - 1) * n + t] -= g.cartan(t + 1, s);
  }
  Matrix out(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int acc = 0;
      for (int k = 0; k < n; ++k) acc += m[i * n + k] * refl[k * n + j];
      out[i * n + j] = acc;
    }
  return out;
}

bool is_identity(const Matrix& m, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i * n + j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool column_has_negative(const Matrix& m, int n, Generator s) {
  for (int i = 0; i < n; ++i)
    if (m[i * n + (s - 1)] < 0) return true;
  return false;
}

std::vector<int> apply_matrix(const Matrix& m, int n, std::span<const int> v) {
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i * n + j] * v[j];
  return out;
}

std::vector<int> simple_reflect(const CoxeterGraph& g, Generator s, std::vector<int> v) {
  int c = 0;
  for (int t = 1; t <= g.rank(); ++t) c += g.cartan(t, s) * v[t - 1];
  v[s - 1] -= c;
  return v;
}

bool nonnegative(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

void collect_words(const CoxeterGraph& g, const Matrix& m, std::vector<Generator>& suffix,
                   std::vector<Word>& out, std::size_t cap) {
  const int n = g.rank();
  if (is_identity(m, n)) {
    out.emplace_back(std::vector<Generator>(suffix.rbegin(), suffix.rend()));
    if (out.size() > cap) throw CapExceeded("oracle: too many reduced words", out.size(), cap);
    return;
  }
  for (Generator s = 1; s <= n; ++s) {
    if (!column_has_negative(m, n, s)) continue;
    suffix.push_back(s);
    collect_words(g, times_reflection(g, m, s), suffix, out, cap);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<Word> all_reduced_words(const Element& w, std::size_t cap) {
  std::vector<Word> out;
  std::vector<Generator> suffix;
  collect_words(w.graph(), to_matrix(w), suffix, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> reduced_words_by_exhaustion(const Element& w) {
  const CoxeterGraph& g = w.graph();
  const int n = g.rank();
  const int len = w.length();
  const Matrix target = to_matrix(w);
  std::vector<Word> out;
  if (n == 0) return {Word{}};
  std::vector<Generator> letters(len, 1);
  while (true) {
    Matrix m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    for (Generator s : letters) m = times_reflection(g, m, s);
    if (m == target) out.emplace_back(letters);
    int pos = len - 1;
    while (pos >= 0 && letters[pos] == n) letters[pos--] = 1;
    if (pos < 0) break;
    ++letters[pos];
  }
  return out;
}

std::vector<RootSequence> all_root_sequences(const Element& w, std::size_t cap) {
  std::vector<RootSequence> out;
  for (const Word& word : all_reduced_words(w, cap)) out.push_back(root_sequence(w.graph(), word));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<RootSequence>> classes_by_bfs(const Element& w, std::size_t cap) {
  const CoxeterGraph& g = w.graph();
  const std::vector<Word> words = all_reduced_words(w, cap);
  std::set<Word> visited;
  std::vector<std::vector<RootSequence>> blocks;
  for (const Word& seed : words) {
    if (visited.count(seed)) continue;
    std::vector<RootSequence> block;
    std::queue<Word> queue;
    queue.push(seed);
    visited.insert(seed);
    while (!queue.empty()) {
      Word u = queue.front();
      queue.pop();
      block.push_back(root_sequence(g, u));
      for (std::size_t k = 0; k + 1 < u.size(); ++k) {
        if (u[k] == u[k + 1] || g.m(u[k], u[k + 1]) != 2) continue;
        Word v = u;
        std::swap(v.letters[k], v.letters[k + 1]);
        if (visited.insert(v).second) queue.push(std::move(v));
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

bool contractible(const Element& w, const InversionTriple& t, std::size_t cap) {
  for (const RootSequence& r : all_root_sequences(w, cap)) {
    for (std::size_t k = 0; k + 2 < r.size(); ++k) {
      std::vector<Root> window{r[k], r[k + 1], r[k + 2]};
      std::sort(window.begin(), window.end());
      std::vector<Root> target{t.low, t.mid, t.high};
      std::sort(target.begin(), target.end());
      if (window == target) return true;
    }
  }
  return false;
}

std::vector<InversionTriple> contractible_triples(const Element& w, std::size_t cap) {
  std::vector<InversionTriple> out;
  const std::vector<RootSequence> seqs = all_root_sequences(w, cap);
  for (const InversionTriple& t : oracle::inversion_triples(w)) {
    std::vector<Root> target{t.low, t.mid, t.high};
    std::sort(target.begin(), target.end());
    bool found = false;
    for (const RootSequence& r : seqs) {
      for (std::size_t k = 0; !found && k + 2 < r.size(); ++k) {
        std::vector<Root> window{r[k], r[k + 1], r[k + 2]};
        std::sort(window.begin(), window.end());
        found = window == target;
      }
      if (found) break;
    }
    if (found) out.push_back(t);
  }
  return out;
}

bool is_freely_braided(const Element& w, std::size_t cap) {
  const auto triples = contractible_triples(w, cap);
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j)
      for (const Root& r : triples[i].roots())
        if (triples[j].contains(r)) return false;
  return true;
}

std::vector<Root> positive_roots(const CoxeterGraph& g, std::size_t cap) {
  const int n = g.rank();
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> queue;
  for (int s = 1; s <= n; ++s) {
    std::vector<int> v(n, 0);
    v[s - 1] = 1;
    seen.insert(v);
    queue.push(std::move(v));
  }
  while (!queue.empty()) {
    const std::vector<int> v = queue.front();
    queue.pop();
    for (int s = 1; s <= n; ++s) {
      std::vector<int> u = simple_reflect(g, s, v);
      if (!nonnegative(u)) continue;
      if (seen.insert(u).second) {
        if (seen.size() > cap) throw CapExceeded("oracle: positive root system too large", seen.size(), cap);
        queue.push(std::move(u));
      }
    }
  }
  std::vector<Root> out;
  for (const auto& v : seen) out.emplace_back(v);
  return out;
}

std::vector<Root> inversion_set(const Element& w, std::size_t cap) {
  const Matrix m = to_matrix(w);
  std::vector<Root> out;
  for (const Root& r : positive_roots(w.graph(), cap)) {
    const std::vector<int> image = apply_matrix(m, w.rank(), r.coeffs());
    if (std::any_of(image.begin(), image.end(), [](int x) { return x < 0; })) out.push_back(r);
  }
  return out;
}

std::vector<InversionTriple> inversion_triples(const Element& w) {
  const std::vector<Root> phi = oracle::inversion_set(w);
  const std::vector<Root> all = positive_roots(w.graph());
  const std::set<Root> phi_set(phi.begin(), phi.end());
  const std::set<Root> root_set(all.begin(), all.end());
  std::vector<InversionTriple> out;
  for (const Root& a : phi)
    for (const Root& b : phi) {
      if (!(a < b)) continue;
      const Root sum = a + b;
      if (root_set.count(sum) && phi_set.count(sum)) out.push_back({a, sum, b});
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fb::oracle
