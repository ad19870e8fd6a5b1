#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "fb/fb.hpp"

namespace fb::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultMaxWords = 1'000'000;

struct Settings {
  std::string graph;
  std::string word;
  bool has_word = false;
  std::string perm;
  std::string format = "json";
  bool text = false;
  std::size_t max_words = 0;  // 0: not given on the command line
  unsigned threads = 1;
  std::string precedence = "lex";
  bool verify = false;
  bool dot = false;
  bool parity = false;
  std::string type = "A";
  int rank = 0;
  bool members = false;
};

struct Input {
  Element element;
  std::optional<Permutation> perm;
};

bool text_output(const Settings& s) { return s.text || s.format == "text"; }

std::size_t resolve_max_words(const Settings& s) {
  if (s.max_words != 0) return s.max_words;
  if (const char* env = std::getenv("FB_MAX_WORDS"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("FB_MAX_WORDS is not a positive integer: '") + env + "'");
  }
  return kDefaultMaxWords;
}

EnumerationOptions options_of(const Settings& s) {
  EnumerationOptions opts;
  opts.max_words = resolve_max_words(s);
  opts.threads = std::max(1u, s.threads);
  return opts;
}

Input resolve_input(const Settings& s) {
  if (!s.perm.empty()) {
    if (!s.graph.empty() || s.has_word) throw ParseError("--perm cannot be combined with --graph/--word");
    Permutation p = parse_permutation(s.perm);
    return Input{perm_to_element(p), p};
  }
  if (s.graph.empty()) throw ParseError("either --graph with --word, or --perm, is required");
  if (!s.has_word) throw ParseError("--word is required with --graph");
  const CoxeterGraph g = parse_graph(s.graph);
  const Word w = parse_word(s.word);
  check_word(g, w);
  return Input{element_of(g, w), std::nullopt};
}

std::string graph_name(const CoxeterGraph& g) {
  return g.name().empty() ? std::string("rank ") + std::to_string(g.rank()) : g.name();
}

json to_json(const Root& r) { return json(std::vector<int>(r.coeffs().begin(), r.coeffs().end())); }

json to_json(const Word& w) { return json(w.letters); }

json to_json(const InversionTriple& t, bool contractible) {
  return json{{"low", to_json(t.low)}, {"mid", to_json(t.mid)}, {"high", to_json(t.high)}, {"contractible", contractible}};
}

json roots_json(std::span<const Root> roots) {
  json out = json::array();
  for (const Root& r : roots) out.push_back(to_json(r));
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Shared analysis

struct Analysis {
  ClassEnumeration enumeration;
  std::vector<InversionTriple> triples;
  std::vector<InversionTriple> contractible;
  std::vector<FSignature> signatures;
  std::vector<int> parities;
  BoundReport bound;
  bool freely_braided = false;
};

Analysis analyze(const Element& w, const Precedence& p, const EnumerationOptions& opts) {
  Analysis a;
  a.enumeration = enumerate_classes_detailed(w, opts);
  a.triples = inversion_triples(w);
  a.contractible = contractible_triples(w, a.enumeration.classes);
  for (const CommutationClass& c : a.enumeration.classes) {
    a.signatures.push_back(f_signature(w, c, p, a.contractible));
    a.parities.push_back(parity(a.signatures.back()));
  }
  a.bound = bound_report(a.enumeration.classes.size(), a.contractible.size());
  a.freely_braided = pairwise_disjoint(a.contractible);
  return a;
}

json classes_json(const Analysis& a) {
  json list = json::array();
  for (std::size_t i = 0; i < a.enumeration.classes.size(); ++i) {
    const CommutationClass& c = a.enumeration.classes[i];
    list.push_back(json{{"canonical", to_json(c.canonical_word)},
                        {"size", c.size},
                        {"signature_bits", a.signatures[i].bits},
                        {"parity", a.parities[i]}});
  }
  return list;
}

json triples_json(const Analysis& a) {
  json list = json::array();
  for (const InversionTriple& t : a.triples) {
    const bool c = std::binary_search(a.contractible.begin(), a.contractible.end(), t);
    list.push_back(to_json(t, c));
  }
  return list;
}

// ---------------------------------------------------------------------------
// Verification against the oracles

struct Verification {
  std::vector<std::string> checks;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;

  void check(const std::string& name, bool ok) {
    checks.push_back(name);
    if (!ok) failures.push_back(name);
  }
};

Verification verify(const Input& in, const Analysis& a, const EnumerationOptions& opts) {
  const Element& w = in.element;
  Verification v;

  const std::vector<Word> oracle_words = oracle::all_reduced_words(w, opts.max_words);
  v.check("reduced_words", oracle_words == a.enumeration.words);

  std::vector<std::vector<RootSequence>> production(a.enumeration.classes.size());
  for (std::size_t i = 0; i < a.enumeration.words.size(); ++i) {
    production[a.enumeration.class_of[i]].push_back(root_sequence(w.graph(), a.enumeration.words[i]));
  }
  for (auto& block : production) std::sort(block.begin(), block.end());
  std::sort(production.begin(), production.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  v.check("class_partition", production == oracle::classes_by_bfs(w, opts.max_words));

  try {
    v.check("inversion_set", oracle::inversion_set(w) == inversion_set(w));
    v.check("inversion_triples", oracle::inversion_triples(w) == a.triples);
    v.check("contractible_triples", oracle::contractible_triples(w, opts.max_words) == a.contractible);
    v.check("freely_braided", oracle::is_freely_braided(w, opts.max_words) == a.freely_braided);
  } catch (const CapExceeded&) {
    v.skipped.emplace_back("root-system checks (infinite or very large root system)");
  }

  v.check("contractible_fast_path", contractible_triples(w, ContractibilityMethod::Auto, opts) == a.contractible);
  v.check("bound_holds", a.bound.bound_holds);

  std::set<std::vector<std::uint8_t>> distinct;
  for (const FSignature& s : a.signatures) distinct.insert(s.bits);
  v.check("signature_injective", distinct.size() == a.signatures.size());

  const CommutationGraph g = commutation_graph(w, a.enumeration);
  const Bipartition b = is_bipartite(g);
  bool proper = b.bipartite;
  for (const auto& [x, y] : g.edges) {
    int differing = 0;
    for (std::size_t k = 0; k < a.signatures[x].bits.size(); ++k)
      differing += a.signatures[x].bits[k] != a.signatures[y].bits[k] ? 1 : 0;
    proper = proper && differing == 1 && a.parities[x] != a.parities[y];
  }
  v.check("graph_parity_coloring", proper);

  if (in.perm) {
    v.check("pattern_criterion", is_freely_braided_perm(*in.perm) == a.freely_braided);
    v.check("one_line_triples", inversion_triples_1line(*in.perm) == a.triples);
    v.check("length_is_inversions", static_cast<std::size_t>(w.length()) == in.perm->inversions());
  }
  return v;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_reduce(const Settings& s, std::ostream& out) {
  if (s.graph.empty()) throw ParseError("--graph is required");
  if (!s.has_word) throw ParseError("--word is required");
  const CoxeterGraph g = parse_graph(s.graph);
  const Word input = parse_word(s.word);
  const Word reduced = reduce(g, input);
  const RootSequence seq = root_sequence(g, reduced);
  const std::vector<Root> phi = seq.sorted_roots();

  if (text_output(s)) {
    out << "graph: " << graph_name(g) << "\n";
    out << "input: " << (input.empty() ? "e" : to_string(input)) << "\n";
    out << "reduced: " << (reduced.empty() ? "e" : to_string(reduced)) << "\n";
    out << "length: " << reduced.size() << "\n";
    out << "root sequence:\n";
    for (std::size_t i = 0; i < seq.size(); ++i) out << "  r" << (i + 1) << " = " << to_string(seq[i]) << "\n";
    out << "inversion set: {";
    for (std::size_t i = 0; i < phi.size(); ++i) out << (i ? ", " : "") << to_string(phi[i]);
    out << "}\n";
    return kOk;
  }
  json doc{{"graph", graph_name(g)},
           {"input", to_json(input)},
           {"reduced", to_json(reduced)},
           {"length", reduced.size()},
           {"root_sequence", roots_json(seq.roots())},
           {"inversion_set", roots_json(phi)}};
  emit(out, doc);
  return kOk;
}

int cmd_words(const Settings& s, std::ostream& out) {
  const Input in = resolve_input(s);
  const std::vector<Word> words = enumerate_reduced_words(in.element, options_of(s));
  if (text_output(s)) {
    for (const Word& w : words) out << (w.empty() ? "e" : to_string(w)) << "\n";
    return kOk;
  }
  json list = json::array();
  for (const Word& w : words) list.push_back(to_json(w));
  emit(out, json{{"graph", graph_name(in.element.graph())}, {"count", words.size()}, {"words", list}});
  return kOk;
}

int cmd_analyze(const Settings& s, std::ostream& out) {
  const Input in = resolve_input(s);
  const Element& w = in.element;
  const Precedence p = Precedence::parse(s.precedence);
  const EnumerationOptions opts = options_of(s);
  const Analysis a = analyze(w, p, opts);
  std::optional<Verification> v;
  if (s.verify) v = verify(in, a, opts);

  if (text_output(s)) {
    out << "graph: " << graph_name(w.graph()) << "\n";
    if (in.perm) out << "perm: " << to_string(*in.perm) << "\n";
    out << "element: " << (w.is_identity() ? "e" : to_string(w.reduced_word())) << "\n";
    out << "length: " << w.length() << "\n";
    out << "inversion triples: " << a.triples.size() << "\n";
    for (const InversionTriple& t : a.triples) {
      const bool c = std::binary_search(a.contractible.begin(), a.contractible.end(), t);
      out << "  {" << to_string(t.low) << ", " << to_string(t.mid) << ", " << to_string(t.high) << "}"
          << (c ? "" : "  (not contractible)") << "\n";
    }
    out << "N: " << a.contractible.size() << "\n";
    out << "commutation classes: " << a.enumeration.classes.size() << "\n";
    out << "bound holds: " << std::boolalpha << a.bound.bound_holds << "\n";
    out << "achieves bound: " << a.bound.achieves_bound << "\n";
    out << "freely braided: " << a.freely_braided << "\n";
    for (std::size_t i = 0; i < a.enumeration.classes.size(); ++i) {
      const CommutationClass& c = a.enumeration.classes[i];
      out << "  [" << (c.canonical_word.empty() ? "e" : to_string(c.canonical_word)) << "] size " << c.size
          << " signature " << a.signatures[i].to_string() << " parity " << (a.parities[i] > 0 ? "+1" : "-1") << "\n";
    }
    if (v) {
      out << "verify: " << (v->failures.empty() ? "ok" : "MISMATCH") << "\n";
      for (const auto& f : v->failures) out << "  failed: " << f << "\n";
    }
  } else {
    json doc{{"graph", graph_name(w.graph())},
             {"element", to_json(w.reduced_word())},
             {"length", w.length()},
             {"n_triples", a.triples.size()},
             {"N", a.contractible.size()},
             {"classes", a.enumeration.classes.size()},
             {"reduced_words", a.enumeration.words.size()},
             {"bound_holds", a.bound.bound_holds},
             {"achieves_bound", a.bound.achieves_bound},
             {"freely_braided", a.freely_braided},
             {"precedence", p.name()},
             {"triples", triples_json(a)},
             {"class_list", classes_json(a)}};
    if (in.perm) {
      doc["perm"] = to_string(*in.perm);
      doc["avoids_patterns"] = is_freely_braided_perm(*in.perm);
    }
    if (v) {
      doc["verify"] = json{{"ok", v->failures.empty()},
                           {"checks", v->checks},
                           {"failures", v->failures},
                           {"skipped", v->skipped}};
    }
    emit(out, doc);
  }
  return v && !v->failures.empty() ? kVerifyMismatch : kOk;
}

int cmd_graph(const Settings& s, std::ostream& out) {
  const Input in = resolve_input(s);
  const Element& w = in.element;
  const Precedence p = Precedence::parse(s.precedence);
  const Analysis a = analyze(w, p, options_of(s));
  const CommutationGraph g = commutation_graph(w, a.enumeration);
  const Bipartition b = is_bipartite(g);

  if (s.dot) {
    if (s.parity) {
      out << to_dot(g, b, std::span<const int>(a.parities));
    } else {
      out << to_dot(g, b);
    }
    return kOk;
  }
  if (text_output(s)) {
    out << "classes: " << g.vertices.size() << "\n";
    out << "edges: " << g.edges.size() << "\n";
    out << "bipartite: " << std::boolalpha << b.bipartite << "\n";
    for (const auto& [x, y] : g.edges) {
      out << "  [" << to_string(g.vertices[x].canonical_word) << "] -- [" << to_string(g.vertices[y].canonical_word)
          << "]\n";
    }
    return kOk;
  }
  json edges = json::array();
  for (const auto& [x, y] : g.edges) edges.push_back(json::array({x, y}));
  json doc{{"element", to_json(w.reduced_word())},
           {"length", w.length()},
           {"n_triples", a.triples.size()},
           {"N", a.contractible.size()},
           {"classes", classes_json(a)},
           {"edges", edges},
           {"bipartite", b.bipartite},
           {"precedence", p.name()}};
  emit(out, doc);
  return kOk;
}

int cmd_enumerate(const Settings& s, std::ostream& out) {
  if (s.type != "A" && s.type != "a") throw ParseError("only --type A is supported for enumeration");
  if (s.rank < 1) throw ParseError("-n must be at least 1");
  if (s.rank > kMaxEnumerationRank) {
    throw CapExceeded("permutation rank exceeds the enumeration limit", s.rank, kMaxEnumerationRank);
  }
  const EnumerationOptions opts = options_of(s);
  json rows = json::array();
  bool columns_agree = true;
  std::ostringstream table;
  table << std::left << std::setw(4) << "n" << std::setw(16) << "freely_braided" << "achieves_bound\n";
  for (int n = 1; n <= s.rank; ++n) {
    const FreelyBraidedCount fb = enumerate_freely_braided(n, s.members);
    std::size_t achievers = 0;
    for (const Permutation& p : all_permutations(n)) {
      if (count_classes_and_check_bound(perm_to_element(p), opts).achieves_bound) ++achievers;
    }
    columns_agree = columns_agree && achievers == fb.count;
    json row{{"n", n}, {"freely_braided", fb.count}, {"achieves_bound", achievers}};
    if (fb.members) {
      json members = json::array();
      for (const Permutation& p : *fb.members) members.push_back(to_string(p));
      row["members"] = members;
    }
    rows.push_back(row);
    table << std::setw(4) << n << std::setw(16) << fb.count << achievers << "\n";
  }
  if (text_output(s)) {
    out << table.str();
    if (!columns_agree) out << "WARNING: columns differ\n";
  } else {
    emit(out, json{{"type", "A"}, {"rows", rows}, {"columns_agree", columns_agree}});
  }
  return columns_agree ? kOk : kVerifyMismatch;
}

void add_format_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--text", s.text, "Human-readable output (same as --format text)");
}

void add_element_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("-g,--graph", s.graph, "Coxeter graph: A<k>, D<k>, E6-E8, or an edge list like 1-2,2-3");
  cmd->add_option("-w,--word", s.word, "Word as generator indices, e.g. \"2 1 3\"")
      ->each([&s](const std::string&) { s.has_word = true; });
  cmd->add_option("--perm", s.perm, "Permutation in 1-line notation (type A)");
}

void add_enumeration_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--max-words", s.max_words, "Cap on reduced words (overrides FB_MAX_WORDS)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", s.threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);
}

void add_precedence_flag(CLI::App* cmd, Settings& s) {
  cmd->add_option("--precedence", s.precedence, "Reference order for signatures")
      ->check(CLI::IsMember({"lex", "revlex"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fb: braid moves, commutation classes and freely braided elements", "fb"};
  app.require_subcommand(1);
  Settings s;

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Reduce a word; print length, root sequence, inversion set");
  reduce_cmd->add_option("-g,--graph", s.graph, "Coxeter graph")->required();
  reduce_cmd->add_option("-w,--word", s.word, "Word")->required()->each([&s](const std::string&) { s.has_word = true; });
  add_format_flags(reduce_cmd, s);

  CLI::App* words_cmd = app.add_subcommand("words", "List all reduced words of an element");
  add_element_flags(words_cmd, s);
  add_enumeration_flags(words_cmd, s);
  add_format_flags(words_cmd, s);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Triples, N(w), classes, signatures and the 2^N bound");
  add_element_flags(analyze_cmd, s);
  add_enumeration_flags(analyze_cmd, s);
  add_precedence_flag(analyze_cmd, s);
  add_format_flags(analyze_cmd, s);
  analyze_cmd->add_flag("--verify", s.verify, "Cross-check every result against the brute-force oracles");

  CLI::App* graph_cmd = app.add_subcommand("graph", "Commutation graph of an element");
  add_element_flags(graph_cmd, s);
  add_enumeration_flags(graph_cmd, s);
  add_precedence_flag(graph_cmd, s);
  add_format_flags(graph_cmd, s);
  graph_cmd->add_flag("--dot", s.dot, "Emit Graphviz DOT");
  graph_cmd->add_flag("--parity", s.parity, "Color DOT nodes by class parity");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "Count freely braided permutations and bound achievers");
  enum_cmd->add_option("--type", s.type, "Coxeter type (only A)");
  enum_cmd->add_option("-n", s.rank, "Largest n of S_n to tabulate")->required();
  enum_cmd->add_flag("--freely-braided", s.members, "Also list the freely braided permutations");
  add_enumeration_flags(enum_cmd, s);
  add_format_flags(enum_cmd, s);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(s, out);
    if (words_cmd->parsed()) return cmd_words(s, out);
    if (analyze_cmd->parsed()) return cmd_analyze(s, out);
    if (graph_cmd->parsed()) return cmd_graph(s, out);
    if (enum_cmd->parsed()) return cmd_enumerate(s, out);
  } catch (const ParseError& e) {
    err << "fb: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidArgument& e) {
    err << "fb: " << e.what() << "\n";
    return kParseError;
  } catch (const CapExceeded& e) {
    err << "fb: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "fb: internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace fb::cli
