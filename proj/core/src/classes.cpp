#include "fb/classes.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

#include "fb/error.hpp"

namespace fb {

// ---------------------------------------------------------------------------
// Precedence

Precedence Precedence::lex() {
  return Precedence("lex", [](const Root& a, const Root& b) { return a < b; });
}

Precedence Precedence::revlex() {
  return Precedence("revlex", [](const Root& a, const Root& b) {
    const auto ca = a.coeffs(), cb = b.coeffs();
    return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
  });
}

Precedence Precedence::custom(std::string name, Compare precedes) {
  return Precedence(std::move(name), std::move(precedes));
}

Precedence Precedence::parse(std::string_view name) {
  if (name == "lex") return lex();
  if (name == "revlex") return revlex();
  throw ParseError("unknown precedence '" + std::string(name) + "' (expected lex or revlex)");
}

// ---------------------------------------------------------------------------
// FSignature

int FSignature::bit(const InversionTriple& t) const {
  const auto it = std::lower_bound(triples.begin(), triples.end(), t);
  if (it == triples.end() || !(*it == t)) throw InvalidArgument("triple outside the signature domain");
  return bits[static_cast<std::size_t>(it - triples.begin())];
}

int FSignature::weight() const {
  int w = 0;
  for (auto b : bits) w += b;
  return w;
}

std::string FSignature::to_string() const {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

FSignature f_signature(const Element& w, const CommutationClass& c, const Precedence& p,
                       std::span<const InversionTriple> contractible) {
  const std::vector<Root> phi = inversion_set(w);
  if (c.order.roots() != phi) throw InvalidArgument("f_signature: class does not belong to the element");
  FSignature sig;
  sig.triples.assign(contractible.begin(), contractible.end());
  std::sort(sig.triples.begin(), sig.triples.end());
  sig.bits.reserve(sig.triples.size());
  for (const InversionTriple& t : sig.triples) {
    const std::size_t lo = c.order.index_of(t.low);
    const std::size_t hi = c.order.index_of(t.high);
    if (lo == phi.size() || hi == phi.size() || c.order.index_of(t.mid) == phi.size() || !(t.low + t.high == t.mid)) {
      throw InvalidArgument("f_signature: triple domain mismatch");
    }
    const bool class_low_first = c.order.less_at(lo, hi);
    if (!class_low_first && !c.order.less_at(hi, lo)) {
      throw std::logic_error("f_signature: outer roots of a triple are incomparable");
    }
    const bool prec_low_first = p.precedes(t.low, t.high);
    sig.bits.push_back(class_low_first == prec_low_first ? 0 : 1);
  }
  return sig;
}

FSignature f_signature(const Element& w, const CommutationClass& c, const Precedence& p,
                       const EnumerationOptions& opts) {
  const auto triples = contractible_triples(w, ContractibilityMethod::Auto, opts);
  return f_signature(w, c, p, triples);
}

int parity(const FSignature& sig) { return sig.weight() % 2 == 0 ? 1 : -1; }

int parity(const Element& w, const CommutationClass& c, const Precedence& p, const EnumerationOptions& opts) {
  return parity(f_signature(w, c, p, opts));
}

// ---------------------------------------------------------------------------
// Bound

BoundReport bound_report(std::size_t classes, std::size_t n_contractible) {
  BoundReport r;
  r.classes = classes;
  r.n_contractible = n_contractible;
  if (n_contractible >= 63) {
    r.bound_holds = true;  // classes is a size_t count, far below 2^63
    r.achieves_bound = false;
  } else {
    const std::uint64_t bound = std::uint64_t{1} << n_contractible;
    r.bound_holds = classes <= bound;
    r.achieves_bound = classes == bound;
  }
  return r;
}

BoundReport count_classes_and_check_bound(const Element& w, const EnumerationOptions& opts) {
  const auto classes = enumerate_classes(w, opts);
  std::size_t n = 0;
  if (w.graph().is_type_a_forest()) {
    n = inversion_triples(w).size();
  } else {
    n = contractible_triples(w, classes).size();
  }
  return bound_report(classes.size(), n);
}

// ---------------------------------------------------------------------------
// Commutation graph

CommutationGraph commutation_graph(const Element& w, const ClassEnumeration& e) {
  const CoxeterGraph& g = w.graph();
  std::unordered_map<Word, std::size_t, WordHash> class_of_word;
  class_of_word.reserve(e.words.size());
  for (std::size_t i = 0; i < e.words.size(); ++i) class_of_word.emplace(e.words[i], e.class_of[i]);

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < e.words.size(); ++i) {
    const std::size_t from = e.class_of[i];
    for (const Word& v : long_braid_neighbors(g, e.words[i])) {
      const auto it = class_of_word.find(v);
      if (it == class_of_word.end()) throw std::logic_error("commutation_graph: neighbor outside enumeration");
      const std::size_t to = it->second;
      if (to != from) edges.emplace(std::min(from, to), std::max(from, to));
    }
  }
  return CommutationGraph{e.classes, {edges.begin(), edges.end()}};
}

CommutationGraph commutation_graph(const Element& w, const EnumerationOptions& opts) {
  return commutation_graph(w, enumerate_classes_detailed(w, opts));
}

Bipartition is_bipartite(std::size_t vertices, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<std::vector<std::size_t>> adj(vertices);
  for (const auto& [a, b] : edges) {
    if (a >= vertices || b >= vertices) throw InvalidArgument("edge endpoint out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  Bipartition out;
  out.bipartite = true;
  out.coloring.assign(vertices, -1);
  for (std::size_t root = 0; root < vertices; ++root) {
    if (out.coloring[root] != -1) continue;
    out.coloring[root] = 0;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      for (std::size_t u : adj[v]) {
        if (out.coloring[u] == -1) {
          out.coloring[u] = 1 - out.coloring[v];
          queue.push(u);
        } else if (out.coloring[u] == out.coloring[v]) {
          out.bipartite = false;
        }
      }
    }
  }
  return out;
}

Bipartition is_bipartite(const CommutationGraph& g) {
  return is_bipartite(g.vertices.size(), g.edges);
}

}  // namespace fb
