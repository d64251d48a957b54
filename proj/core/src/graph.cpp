#include "thcover/graph.hpp"

#include <numeric>
#include <string>

#include "thcover/error.hpp"

namespace thcover {

Graph::Graph(Vertex n, std::vector<EdgePair> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (const EdgePair& e : edges_) {
    if (e.u < 0 || e.v >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw PreconditionError("duplicate edge");
  }

  const auto vn = static_cast<std::size_t>(n);
  adjacency_.assign(vn, VertexSet(vn));
  std::vector<std::size_t> degree(vn, 0);
  first_edge_.assign(vn + 1, 0);
  for (const EdgePair& e : edges_) {
    adjacency_[e.u].set(e.v);
    adjacency_[e.v].set(e.u);
    ++degree[e.u];
    ++degree[e.v];
    ++first_edge_[e.u + 1];
  }
  std::partial_sum(first_edge_.begin(), first_edge_.end(), first_edge_.begin());

  neighbor_offset_.assign(vn + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), neighbor_offset_.begin() + 1);
  neighbor_list_.resize(neighbor_offset_.back());
  for (std::size_t v = 0; v < vn; ++v) {
    std::size_t k = neighbor_offset_[v];
    for (auto w = adjacency_[v].find_first(); w != VertexSet::npos;
         w = adjacency_[v].find_next(w)) {
      neighbor_list_[k++] = static_cast<Vertex>(w);
    }
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return std::span<const Vertex>(neighbor_list_)
      .subspan(neighbor_offset_[i], neighbor_offset_[i + 1] - neighbor_offset_[i]);
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
  if (a == b || !adjacent(a, b)) return kNoEdge;
  const EdgePair key(a, b);
  const auto first = edges_.begin() + first_edge_[key.u];
  const auto last = edges_.begin() + first_edge_[key.u + 1];
  const auto it = std::lower_bound(first, last, key);
  return static_cast<EdgeId>(it - edges_.begin());
}

Graph Graph::edge_subgraph(std::span<const EdgeId> ids) const {
  std::vector<EdgePair> sub;
  sub.reserve(ids.size());
  for (EdgeId e : ids) sub.push_back(edge(e));
  return Graph(n_, std::move(sub));
}

VertexOrdering::VertexOrdering(std::vector<Vertex> sequence)
    : sequence_(std::move(sequence)), rank_(sequence_.size(), -1) {
  const auto n = static_cast<Vertex>(sequence_.size());
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const Vertex v = sequence_[i];
    if (v < 0 || v >= n) {
      throw PreconditionError("ordering entry " + std::to_string(v + 1) + " out of range");
    }
    if (rank_[v] != -1) {
      throw PreconditionError("ordering repeats vertex " + std::to_string(v + 1));
    }
    rank_[v] = static_cast<Vertex>(i);
  }
}

VertexOrdering VertexOrdering::identity(Vertex n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  return VertexOrdering(std::move(seq));
}

std::strong_ordering pair_lex_compare(const VertexOrdering& order, EdgePair p,
                                      EdgePair q) {
  auto ranks = [&](EdgePair e) {
    const Vertex a = order.rank(e.u);
    const Vertex b = order.rank(e.v);
    return std::pair{std::min(a, b), std::max(a, b)};
  };
  return ranks(p) <=> ranks(q);
}

}  // namespace thcover
