#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "thcover/graph.hpp"

namespace thcover {

// Edge-list text format:
//
//   n m
//   u v        (m lines, 1 <= u, v <= n)
//
// Lines whose first non-blank character is '#' and blank lines are ignored.
// Vertices are 1-based in text and 0-based in memory.

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Canonical form: header, then edges ascending, one per line.
std::string serialize_graph(const Graph& g);

/// Ordering format: a permutation of 1..n as whitespace-separated ids.
VertexOrdering parse_ordering(std::string_view text, Vertex n);
VertexOrdering read_ordering_file(const std::filesystem::path& path, Vertex n);
std::string format_ordering(const VertexOrdering& order);

/// "u-v", 1-based.
std::string format_edge(EdgePair e);
/// Space-separated "u-v" tokens in the given order.
std::string format_edges(const Graph& g, std::span<const EdgeId> ids);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace thcover
