#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace thcover {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
inline constexpr EdgeId kNoEdge = -1;

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair, stored with u < v.
struct EdgePair {
  Vertex u = 0;
  Vertex v = 0;

  constexpr EdgePair() = default;
  constexpr EdgePair(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool contains(Vertex x) const { return x == u || x == v; }
  constexpr bool disjoint(EdgePair o) const {
    return !contains(o.u) && !contains(o.v);
  }

  friend constexpr auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted by (u, v), and an edge's index in that list is its
/// identity everywhere else in the library (auxiliary-graph vertices, edge
/// classes, covers). Adjacency is a dense bit matrix so that both edge and
/// non-edge queries are O(1). Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on out-of-range endpoints, self-loops or
  /// duplicate edges. The input order of `edges` is irrelevant.
  Graph(Vertex n, std::vector<EdgePair> edges);

  Vertex vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const EdgePair> edges() const { return edges_; }
  const EdgePair& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  bool adjacent(Vertex a, Vertex b) const {
    return adjacency_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b));
  }
  const VertexSet& neighborhood(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  /// Neighbors in ascending id order.
  std::span<const Vertex> neighbors(Vertex v) const;
  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(neighbor_offset_[v + 1] - neighbor_offset_[v]);
  }

  /// Index of edge {a, b}, or kNoEdge.
  EdgeId edge_id(Vertex a, Vertex b) const;

  /// Spanning subgraph (same vertex set) on the given edges of this graph.
  Graph edge_subgraph(std::span<const EdgeId> ids) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<EdgePair> edges_;
  std::vector<VertexSet> adjacency_;
  std::vector<std::size_t> neighbor_offset_{0};
  std::vector<Vertex> neighbor_list_;
  // edges_[first_edge_[u] .. first_edge_[u+1]) are the edges with min endpoint u
  std::vector<EdgeId> first_edge_{0};
};

/// A total order on the vertices. Positions are 0-based internally.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  /// `sequence[i]` is the vertex at position i. Throws PreconditionError if
  /// the sequence is not a permutation of 0..size-1.
  explicit VertexOrdering(std::vector<Vertex> sequence);

  static VertexOrdering identity(Vertex n);

  Vertex size() const { return static_cast<Vertex>(sequence_.size()); }
  Vertex at(Vertex position) const { return sequence_[static_cast<std::size_t>(position)]; }
  Vertex rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
  bool before(Vertex a, Vertex b) const { return rank(a) < rank(b); }
  std::span<const Vertex> sequence() const { return sequence_; }

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<Vertex> sequence_;
  std::vector<Vertex> rank_;
};

/// Lexicographic comparison of two 2-element vertex sets under `order`:
/// each pair is sorted by rank, then compared by its earlier vertex and
/// tie-broken by its later one.
std::strong_ordering pair_lex_compare(const VertexOrdering& order, EdgePair p,
                                      EdgePair q);

}  // namespace thcover
