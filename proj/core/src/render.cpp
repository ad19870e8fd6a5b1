#include "fb/render.hpp"

#include <sstream>

namespace fb {

std::string to_string(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const int c = r[i];
    if (c == 0) continue;
    if (c < 0) {
      out.push_back('-');
    } else if (!out.empty()) {
      out.push_back('+');
    }
    const int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

std::string to_string(const RootSequence& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r[i]);
  }
  return out + ")";
}

std::string to_dot(const CommutationGraph& g, const Bipartition& bipartition,
                   std::optional<std::span<const int>> parities) {
  std::ostringstream out;
  out << "graph commutation {\n";
  out << "  // bipartite: " << (bipartition.bipartite ? "true" : "false") << "\n";
  out << "  // classes: " << g.vertices.size() << ", edges: " << g.edges.size() << "\n";
  if (parities) out << "  node [style=filled];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const std::string label = g.vertices[i].canonical_word.empty() ? "e" : to_string(g.vertices[i].canonical_word);
    out << "  c" << i << " [label=\"" << label << "\"";
    if (parities) {
      const int p = (*parities)[i];
      out << ", class=\"" << (p > 0 ? "even" : "odd") << "\", fillcolor=\"" << (p > 0 ? "white" : "gray") << "\"";
    }
    out << "];\n";
  }
  for (const auto& [a, b] : g.edges) out << "  c" << a << " -- c" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fb
