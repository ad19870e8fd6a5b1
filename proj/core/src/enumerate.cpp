#include "fb/enumerate.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "fb/error.hpp"

namespace fb {

namespace {

void check_enumerable(const Element& w, const EnumerationOptions& opts) {
  if (w.length() > opts.max_length) {
    throw CapExceeded("element length exceeds the configured maximum word length",
                      static_cast<std::size_t>(w.length()), static_cast<std::size_t>(opts.max_length));
  }
}

std::vector<Word> braid_neighbors(const CoxeterGraph& g, const Word& w) {
  std::vector<Word> out = short_braid_neighbors(g, w);
  std::vector<Word> longs = long_braid_neighbors(g, w);
  out.insert(out.end(), std::make_move_iterator(longs.begin()), std::make_move_iterator(longs.end()));
  return out;
}

std::vector<std::vector<Word>> expand_level(const CoxeterGraph& g, const std::vector<Word>& frontier,
                                            unsigned threads) {
  std::vector<std::vector<Word>> produced(frontier.size());
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), frontier.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < frontier.size(); ++i) produced[i] = braid_neighbors(g, frontier[i]);
    return produced;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < frontier.size(); i += workers) produced[i] = braid_neighbors(g, frontier[i]);
    });
  }
  pool.clear();  // joins
  return produced;
}

}  // namespace

std::vector<Word> short_braid_neighbors(const CoxeterGraph& g, const Word& w) {
  std::vector<Word> out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] != w[k + 1] && g.m(w[k], w[k + 1]) == 2) {
      Word v = w;
      std::swap(v.letters[k], v.letters[k + 1]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Word> long_braid_neighbors(const CoxeterGraph& g, const Word& w) {
  std::vector<Word> out;
  for (std::size_t k = 0; k + 2 < w.size(); ++k) {
    if (w[k] == w[k + 2] && w[k] != w[k + 1] && g.m(w[k], w[k + 1]) == 3) {
      Word v = w;
      v.letters[k] = v.letters[k + 2] = w[k + 1];
      v.letters[k + 1] = w[k];
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Word> enumerate_reduced_words(const Element& w, const EnumerationOptions& opts) {
  check_enumerable(w, opts);
  const CoxeterGraph& g = w.graph();
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> frontier{w.reduced_word()};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    auto produced = expand_level(g, frontier, opts.threads);
    std::vector<Word> next;
    for (auto& batch : produced) {
      for (Word& v : batch) {
        if (seen.contains(v)) continue;
        seen.insert(v);
        if (seen.size() > opts.max_words) {
          throw CapExceeded("too many reduced words", seen.size(), opts.max_words);
        }
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

ClassEnumeration enumerate_classes_detailed(const Element& w, const EnumerationOptions& opts) {
  ClassEnumeration result;
  result.words = enumerate_reduced_words(w, opts);
  result.class_of.reserve(result.words.size());
  std::unordered_map<HeapOrder, std::size_t, HeapOrderHash> index;
  // Words are sorted, so the first member seen is the canonical one and the
  // classes come out ordered by canonical word.
  for (const Word& word : result.words) {
    RootSequence seq = root_sequence(w.graph(), word);
    HeapOrder order = heap_order(seq);
    auto [it, inserted] = index.try_emplace(order, result.classes.size());
    if (inserted) {
      result.classes.push_back(CommutationClass{word, std::move(seq), 0, std::move(order)});
    }
    ++result.classes[it->second].size;
    result.class_of.push_back(it->second);
  }
  return result;
}

std::vector<CommutationClass> enumerate_classes(const Element& w, const EnumerationOptions& opts) {
  return enumerate_classes_detailed(w, opts).classes;
}

}  // namespace fb
