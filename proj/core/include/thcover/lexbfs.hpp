#pragma once

#include <optional>

#include "thcover/graph.hpp"

namespace thcover {

/// Lex-BFS by partition refinement, O(n + m). Among vertices with the best
/// label, the smallest id is taken; so the search starts at vertex 0 and
/// restarts at the smallest unvisited id when a component is exhausted.
VertexOrdering lexbfs(const Graph& g);

struct LexBfsViolation {
  Vertex position;  ///< 0-based step at which the ordering goes wrong
  Vertex chosen;    ///< vertex the ordering places there
  Vertex better;    ///< an unplaced vertex with a strictly better label
};

/// Nothing iff some tie-breaking lets Lex-BFS produce `order`.
std::optional<LexBfsViolation> verify_lexbfs(const Graph& g, const VertexOrdering& order);

}  // namespace thcover
