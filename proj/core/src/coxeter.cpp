#include "fb/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "fb/error.hpp"

namespace fb {

namespace {

constexpr int kMaxEdgeListIndex = 64;

std::size_t mix(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<CoxeterGraph::Edge> path_edges(int k) {
  std::vector<CoxeterGraph::Edge> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

// Multiply m (row-major n x n) on the right by the matrix of the simple
// reflection s: column t becomes col_t - C[t][s] col_s, column s is negated.
void right_multiply_simple(const CoxeterGraph& g, std::vector<int>& m, Generator s) {
  const int n = g.rank();
  const int sc = s - 1;
  for (int t = 0; t < n; ++t) {
    if (t == sc) continue;
    const int c = g.cartan(t + 1, s);
    if (c == 0) continue;
    for (int row = 0; row < n; ++row) m[row * n + t] -= c * m[row * n + sc];
  }
  for (int row = 0; row < n; ++row) m[row * n + sc] = -m[row * n + sc];
}

// Column s of m is a root, so checking any negative coordinate suffices.
bool column_negative(std::span<const int> m, int n, Generator s) {
  for (int row = 0; row < n; ++row) {
    if (m[row * n + (s - 1)] < 0) return true;
  }
  return false;
}

std::vector<int> identity_matrix(int n) {
  std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoxeterGraph

CoxeterGraph::CoxeterGraph() : data_(std::make_shared<const Data>()) {}

CoxeterGraph::CoxeterGraph(int rank, std::vector<Edge> edges, std::string name) {
  if (rank < 0) throw InvalidArgument("negative rank");
  auto data = std::make_shared<Data>();
  data->rank = rank;
  data->name = std::move(name);
  for (auto& [a, b] : edges) {
    if (a < 1 || a > rank || b < 1 || b > rank) {
      throw InvalidArgument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                            " outside 1.." + std::to_string(rank));
    }
    if (a == b) throw InvalidArgument("self-loop at node " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidArgument("duplicate edge in Coxeter graph");
  }
  data->edges = std::move(edges);
  data->cartan.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) data->cartan[i * rank + i] = 2;
  for (const auto& [a, b] : data->edges) {
    data->cartan[(a - 1) * rank + (b - 1)] = -1;
    data->cartan[(b - 1) * rank + (a - 1)] = -1;
  }
  data_ = std::move(data);
}

int CoxeterGraph::cartan(Generator s, Generator t) const {
  if (!valid_generator(s) || !valid_generator(t)) {
    throw InvalidArgument("generator out of range");
  }
  return data_->cartan[(s - 1) * data_->rank + (t - 1)];
}

int CoxeterGraph::m(Generator s, Generator t) const {
  if (s == t) {
    if (!valid_generator(s)) throw InvalidArgument("generator out of range");
    return 1;
  }
  return cartan(s, t) == -1 ? 3 : 2;
}

int CoxeterGraph::pairing(const Root& a, const Root& b) const {
  const int n = rank();
  int sum = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    int row = 0;
    for (int j = 0; j < n; ++j) row += data_->cartan[i * n + j] * b[j];
    sum += a[i] * row;
  }
  return sum;
}

int CoxeterGraph::pairing_with_simple(const Root& r, Generator s) const {
  const int n = rank();
  int sum = 0;
  for (int i = 0; i < n; ++i) sum += r[i] * data_->cartan[i * n + (s - 1)];
  return sum;
}

bool CoxeterGraph::is_type_a_forest() const {
  const int n = rank();
  std::vector<int> degree(n + 1, 0);
  for (const auto& [a, b] : edges()) {
    if (++degree[a] > 2 || ++degree[b] > 2) return false;
  }
  // Acyclic iff |E| = |V| - #components.
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges()) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool CoxeterGraph::is_standard_path() const {
  return edges() == path_edges(rank());
}

CoxeterGraph parse_graph(std::string_view input) {
  const std::string_view text = trim(input);
  if (text.empty()) throw ParseError("empty graph description");

  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (family == 'A' || family == 'D' || family == 'E') {
    int k = 0;
    if (!parse_int(text.substr(1), k) || text.size() < 2 ||
        !std::isdigit(static_cast<unsigned char>(text[1]))) {
      throw ParseError("malformed graph '" + std::string(text) + "'");
    }
    const std::string name = std::string(1, family) + std::to_string(k);
    switch (family) {
      case 'A':
        return CoxeterGraph(k, path_edges(k), name);
      case 'D': {
        if (k < 4) throw ParseError("D<k> needs k >= 4, got '" + std::string(text) + "'");
        std::vector<CoxeterGraph::Edge> edges{{1, 2}, {2, 3}, {2, 4}};
        for (int i = 4; i < k; ++i) edges.emplace_back(i, i + 1);
        return CoxeterGraph(k, std::move(edges), name);
      }
      default: {
        if (k < 6 || k > 8) throw ParseError("E<k> needs 6 <= k <= 8, got '" + std::string(text) + "'");
        std::vector<CoxeterGraph::Edge> edges{{1, 3}, {3, 4}, {2, 4}};
        for (int i = 4; i < k; ++i) edges.emplace_back(i, i + 1);
        return CoxeterGraph(k, std::move(edges), name);
      }
    }
  }

  std::vector<CoxeterGraph::Edge> edges;
  int rank = 0;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto dash = item.find('-');
    int a = 0, b = 0;
    if (dash == std::string_view::npos || !parse_int(item.substr(0, dash), a) ||
        !parse_int(item.substr(dash + 1), b)) {
      throw ParseError("malformed edge '" + std::string(item) + "' in graph");
    }
    if (a < 1 || b < 1 || a > kMaxEdgeListIndex || b > kMaxEdgeListIndex) {
      throw ParseError("node index out of range in edge '" + std::string(item) + "'");
    }
    if (a == b) throw ParseError("self-loop '" + std::string(item) + "' in graph");
    edges.emplace_back(a, b);
    rank = std::max({rank, a, b});
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  try {
    return CoxeterGraph(rank, std::move(edges), std::string(text));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Root

Root::Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
  bool pos = false, neg = false;
  for (int c : coeffs_) {
    pos |= c > 0;
    neg |= c < 0;
  }
  if (pos == neg) throw InvalidArgument("not a root: zero or mixed-sign coefficient vector");
}

Root Root::simple(int rank, Generator s) {
  if (s < 1 || s > rank) throw InvalidArgument("simple root index out of range");
  std::vector<int> c(rank, 0);
  c[s - 1] = 1;
  return Root(std::move(c));
}

bool Root::is_positive() const noexcept {
  for (int c : coeffs_) {
    if (c != 0) return c > 0;
  }
  return false;
}

int Root::height() const noexcept {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), 0);
}

Generator Root::simple_index() const noexcept {
  Generator found = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (coeffs_[i] != 1 || found != 0) return 0;
    found = static_cast<Generator>(i + 1);
  }
  return found;
}

Root Root::operator-() const {
  std::vector<int> c(coeffs_);
  for (int& x : c) x = -x;
  return Root(std::move(c));
}

Root Root::operator+(const Root& other) const {
  if (other.size() != size()) throw InvalidArgument("adding roots of different rank");
  std::vector<int> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return Root(std::move(c));
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = r.size();
  for (int c : r.coeffs()) h = mix(h, static_cast<std::size_t>(c));
  return h;
}

// ---------------------------------------------------------------------------
// Word

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (Generator s : w.letters) h = mix(h, static_cast<std::size_t>(s));
  return h;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
    int s = 0;
    if (!parse_int(text.substr(i, j - i), s) || s < 1) {
      throw ParseError("malformed generator '" + std::string(text.substr(i, j - i)) + "' in word");
    }
    w.letters.push_back(s);
    i = j;
  }
  return w;
}

void check_word(const CoxeterGraph& g, const Word& w) {
  for (Generator s : w.letters) {
    if (!g.valid_generator(s)) {
      throw InvalidArgument("letter " + std::to_string(s) + " outside 1.." + std::to_string(g.rank()));
    }
  }
}

// ---------------------------------------------------------------------------
// Element

Element::Element(CoxeterGraph g)
    : graph_(std::move(g)), matrix_(identity_matrix(graph_.rank())), length_(0) {}

Element::Element(CoxeterGraph g, std::vector<int> matrix, int length)
    : graph_(std::move(g)), matrix_(std::move(matrix)), length_(length) {}

int Element::peel_length(const CoxeterGraph& g, std::vector<int> m) {
  const int n = g.rank();
  int length = 0;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (Generator s = 1; s <= n; ++s) {
      if (column_negative(m, n, s)) {
        right_multiply_simple(g, m, s);
        ++length;
        stripped = true;
        break;
      }
    }
  }
  return length;
}

Root Element::apply(const Root& r) const {
  const int n = rank();
  if (static_cast<int>(r.size()) != n) throw InvalidArgument("root rank mismatch");
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int j = 0; j < n; ++j) sum += matrix_[i * n + j] * r[j];
    out[i] = sum;
  }
  return Root(std::move(out));
}

Root Element::image_of_simple(Generator s) const {
  if (!graph_.valid_generator(s)) throw InvalidArgument("generator out of range");
  const int n = rank();
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = matrix_[i * n + (s - 1)];
  return Root(std::move(out));
}

Element Element::times(Generator s) const {
  if (!graph_.valid_generator(s)) throw InvalidArgument("generator out of range");
  const bool descent = column_negative(matrix_, rank(), s);
  std::vector<int> m(matrix_);
  right_multiply_simple(graph_, m, s);
  return Element(graph_, std::move(m), descent ? length_ - 1 : length_ + 1);
}

Element Element::operator*(const Element& other) const {
  if (!(graph_ == other.graph_)) throw InvalidArgument("multiplying elements of different groups");
  const int n = rank();
  std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int a = matrix_[i * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) m[i * n + j] += a * other.matrix_[k * n + j];
    }
  const int length = peel_length(graph_, m);
  return Element(graph_, std::move(m), length);
}

Element Element::inverse() const {
  Word w = reduced_word();
  std::reverse(w.letters.begin(), w.letters.end());
  return element_of(graph_, w);
}

Word Element::reduced_word() const {
  const int n = rank();
  std::vector<int> m(matrix_);
  std::vector<Generator> peeled;
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (Generator s = 1; s <= n; ++s) {
      if (column_negative(m, n, s)) {
        right_multiply_simple(graph_, m, s);
        peeled.push_back(s);
        stripped = true;
        break;
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return Word(std::move(peeled));
}

std::size_t Element::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(rank());
  for (int x : matrix_) h = mix(h, static_cast<std::size_t>(x));
  return h;
}

// ---------------------------------------------------------------------------
// Free functions

Root reflect(const CoxeterGraph& g, Generator s, const Root& r) {
  if (!g.valid_generator(s)) throw InvalidArgument("generator " + std::to_string(s) + " out of range");
  if (static_cast<int>(r.size()) != g.rank()) throw InvalidArgument("root rank mismatch");
  const int c = g.pairing_with_simple(r, s);
  if (c == 0) return r;
  std::vector<int> out(r.coeffs().begin(), r.coeffs().end());
  out[s - 1] -= c;
  return Root(std::move(out));
}

Root act(const CoxeterGraph& g, const Word& w, const Root& r) {
  check_word(g, w);
  Root out = r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect(g, *it, out);
  return out;
}

Element element_of(const CoxeterGraph& g, const Word& w) {
  check_word(g, w);
  std::vector<int> m = identity_matrix(g.rank());
  for (Generator s : w.letters) right_multiply_simple(g, m, s);
  const int length = static_cast<int>(reduce(g, w).size());
  return Element(g, std::move(m), length);
}

bool is_right_descent(const Element& w, Generator s) {
  if (!w.graph().valid_generator(s)) throw InvalidArgument("generator " + std::to_string(s) + " out of range");
  return column_negative(w.matrix(), w.rank(), s);
}

Word reduce(const CoxeterGraph& g, const Word& w) {
  check_word(g, w);
  std::vector<Generator> u;
  std::vector<Root> beta;
  for (Generator s : w.letters) {
    // beta[k] = u_{k+1} ... u_m (alpha_s); u * s is shorter iff u(alpha_s) < 0,
    // and then the deleted letter u_k is one with beta[k] = alpha_{u_k}.
    const std::size_t m = u.size();
    beta.assign(m + 1, Root());
    beta[m] = Root::simple(g.rank(), s);
    for (std::size_t k = m; k-- > 0;) beta[k] = reflect(g, u[k], beta[k + 1]);
    if (beta[0].is_positive()) {
      u.push_back(s);
      continue;
    }
    std::size_t del = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (beta[k + 1].simple_index() == u[k]) {
        del = k;
        break;
      }
    }
    u.erase(u.begin() + static_cast<std::ptrdiff_t>(del));
  }
  return Word(std::move(u));
}

bool is_reduced(const CoxeterGraph& g, const Word& w) {
  return reduce(g, w).size() == w.size();
}

}  // namespace fb
