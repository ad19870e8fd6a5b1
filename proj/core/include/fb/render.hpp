#pragma once

// Text renderings shared by the CLI and tests.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fb/classes.hpp"
#include "fb/coxeter.hpp"
#include "fb/rootseq.hpp"

namespace fb {

/// "a1+2a2+a3+a4"; negative roots as "-a1-a2".
std::string to_string(const Root& r);

/// "2 1 2"; the empty word renders as "".
std::string to_string(const Word& w);

/// "(a2, a1+a2, ...)".
std::string to_string(const RootSequence& r);

/// Deterministic DOT: one node per class labelled by its canonical word,
/// unlabelled undirected edges, and a "// bipartite: true|false" comment.
/// With parities (one +1/-1 per vertex) nodes get a parity class and a
/// fill color.
std::string to_dot(const CommutationGraph& g, const Bipartition& bipartition,
                   std::optional<std::span<const int>> parities = std::nullopt);

}  // namespace fb
