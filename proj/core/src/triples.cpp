#include "fb/triples.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fb/error.hpp"

namespace fb {

namespace {

std::size_t position_of(const RootSequence& r, const Root& x) {
  const auto it = std::find(r.roots().begin(), r.roots().end(), x);
  return static_cast<std::size_t>(it - r.roots().begin());
}

void check_triple_of(const Element& w, const InversionTriple& t) {
  const std::vector<Root> phi = inversion_set(w);
  const bool ok = t.low.size() == static_cast<std::size_t>(w.rank()) && t.low + t.high == t.mid &&
                  std::binary_search(phi.begin(), phi.end(), t.low) &&
                  std::binary_search(phi.begin(), phi.end(), t.mid) &&
                  std::binary_search(phi.begin(), phi.end(), t.high);
  if (!ok) throw InvalidArgument("not an inversion triple of the element");
}

bool covered_by_mid(const InversionTriple& t, std::span<const CommutationClass> classes) {
  return std::any_of(classes.begin(), classes.end(), [&](const CommutationClass& c) {
    return c.order.covers(t.low, t.mid) || c.order.covers(t.high, t.mid);
  });
}

}  // namespace

InversionTriple InversionTriple::of(const Root& a, const Root& b) {
  Root mid = a + b;
  if (b < a) return {b, std::move(mid), a};
  return {a, std::move(mid), b};
}

bool InversionTriple::shares_root_with(const InversionTriple& other) const {
  return contains(other.low) || contains(other.mid) || contains(other.high);
}

std::vector<InversionTriple> inversion_triples(const Element& w) {
  const std::vector<Root> phi = inversion_set(w);
  std::vector<InversionTriple> out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    for (std::size_t j = i + 1; j < phi.size(); ++j) {
      Root sum = phi[i] + phi[j];
      if (std::binary_search(phi.begin(), phi.end(), sum)) {
        out.push_back({phi[i], std::move(sum), phi[j]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_contractible(const InversionTriple& t, std::span<const CommutationClass> classes) {
  return std::any_of(classes.begin(), classes.end(), [&](const CommutationClass& c) {
    return c.order.covers(t.mid, t.low) || c.order.covers(t.mid, t.high);
  });
}

bool is_contractible(const Element& w, const InversionTriple& t, ContractibilityMethod method,
                     const EnumerationOptions& opts) {
  check_triple_of(w, t);
  switch (method) {
    case ContractibilityMethod::Auto:
      if (w.graph().is_type_a_forest()) return true;
      [[fallthrough]];
    case ContractibilityMethod::MidCovers:
      return is_contractible(t, enumerate_classes(w, opts));
    case ContractibilityMethod::CoveredByMid:
      return covered_by_mid(t, enumerate_classes(w, opts));
  }
  return false;
}

std::vector<InversionTriple> contractible_triples(const Element& w, std::span<const CommutationClass> classes) {
  std::vector<InversionTriple> out;
  for (InversionTriple& t : inversion_triples(w)) {
    if (is_contractible(t, classes)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<InversionTriple> contractible_triples(const Element& w, ContractibilityMethod method,
                                                  const EnumerationOptions& opts) {
  std::vector<InversionTriple> all = inversion_triples(w);
  if (all.empty()) return all;
  if (method == ContractibilityMethod::Auto && w.graph().is_type_a_forest()) return all;
  const std::vector<CommutationClass> classes = enumerate_classes(w, opts);
  std::vector<InversionTriple> out;
  for (InversionTriple& t : all) {
    const bool yes = method == ContractibilityMethod::CoveredByMid ? covered_by_mid(t, classes)
                                                                    : is_contractible(t, classes);
    if (yes) out.push_back(std::move(t));
  }
  return out;
}

bool pairwise_disjoint(std::span<const InversionTriple> triples) {
  std::set<Root> used;
  for (const InversionTriple& t : triples) {
    for (const Root& r : t.roots()) {
      if (!used.insert(r).second) return false;
    }
  }
  return true;
}

bool is_freely_braided(const Element& w, const EnumerationOptions& opts) {
  const auto triples = contractible_triples(w, ContractibilityMethod::Auto, opts);
  return pairwise_disjoint(triples);
}

bool is_consecutive_in(const InversionTriple& t, const RootSequence& r) {
  for (std::size_t k = 0; k + 2 < r.size(); ++k) {
    int hits = 0;
    for (std::size_t d = 0; d < 3; ++d) hits += t.contains(r[k + d]) ? 1 : 0;
    if (hits == 3) return true;
  }
  return false;
}

RootSequence consecutive_normal_form(const Element& w, const RootSequence& start, const EnumerationOptions& opts) {
  if (!(start.graph() == w.graph()) || start.sorted_roots() != inversion_set(w)) {
    throw InvalidArgument("consecutive_normal_form: start is not a root sequence of the element");
  }
  std::vector<InversionTriple> triples = contractible_triples(w, ContractibilityMethod::Auto, opts);
  if (!pairwise_disjoint(triples)) {
    throw InvalidArgument("consecutive_normal_form: element is not freely braided");
  }
  std::stable_sort(triples.begin(), triples.end(), [&](const InversionTriple& a, const InversionTriple& b) {
    return position_of(start, a.mid) < position_of(start, b.mid);
  });

  RootSequence seq = start;
  for (const InversionTriple& t : triples) {
    const std::size_t pm = position_of(seq, t.mid);
    const std::size_t pa = position_of(seq, t.low);
    const std::size_t pb = position_of(seq, t.high);
    const std::size_t first = std::min(pa, pb);
    const std::size_t last = std::max(pa, pb);
    if (!(first < pm && pm < last)) {
      throw std::logic_error("consecutive_normal_form: mid root not between the outer roots");
    }
    // Roots strictly between an outer root and the mid root are orthogonal
    // to that outer root, so it slides next to mid by commutations alone.
    auto slide_first = [&] {
      for (std::size_t p = first; p + 1 < pm; ++p) seq = apply_short_move(seq, p);
    };
    auto slide_last = [&] {
      for (std::size_t p = last; p > pm + 1; --p) seq = apply_short_move(seq, p - 1);
    };
    if (pm - first <= last - pm) {
      slide_first();
      slide_last();
    } else {
      slide_last();
      slide_first();
    }
  }
  for (const InversionTriple& t : triples) {
    if (!is_consecutive_in(t, seq)) {
      throw std::logic_error("consecutive_normal_form: a contractible triple is not consecutive");
    }
  }
  return seq;
}

}  // namespace fb
