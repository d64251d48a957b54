#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "thcover/graph.hpp"
#include "thcover/partition.hpp"

namespace thcover {

struct AuxiliaryOptions {
  /// Keep a dense bit matrix for adjacency() queries up to this many G-edges.
  EdgeId dense_limit = 4000;
  /// Edges flagged here are treated as isolated without being tested. Empty
  /// means none. Callers must only skip edges that really are isolated (the
  /// clique fill of a hat graph, for instance).
  std::vector<bool> skip;
};

/// The auxiliary graph G*: one vertex per edge of G, two adjacent iff they
/// are the opposite edges of an alternating 4-cycle.
class AuxiliaryGraph {
 public:
  EdgeId vertex_count() const { return static_cast<EdgeId>(offset_.size()) - 1; }
  std::size_t edge_count() const { return list_.size() / 2; }

  bool adjacent(EdgeId e, EdgeId f) const;
  /// Ascending.
  std::span<const EdgeId> neighbors(EdgeId e) const;
  bool isolated(EdgeId e) const { return neighbors(e).empty(); }

  int component(EdgeId e) const { return component_[static_cast<std::size_t>(e)]; }
  int component_count() const { return static_cast<int>(members_offset_.size()) - 1; }
  /// Ascending edge ids. Components are numbered by their smallest edge id.
  std::span<const EdgeId> component_members(int c) const;

  /// All G*-edges as (e, f) with e < f, ascending.
  std::vector<std::pair<EdgeId, EdgeId>> edge_list() const;

  bool bipartite() const;

 private:
  friend AuxiliaryGraph build_auxiliary(const Graph& g, const AuxiliaryOptions& options);

  std::vector<std::size_t> offset_{0};
  std::vector<EdgeId> list_;
  std::vector<VertexSet> dense_;
  std::vector<int> component_;
  std::vector<std::size_t> members_offset_{0};
  std::vector<EdgeId> members_;
};

/// True iff e and f are the opposite edges of some alternating 4-cycle.
bool opposite_edges(const Graph& g, EdgePair e, EdgePair f);

/// Tests all O(m^2) edge pairs.
AuxiliaryGraph build_auxiliary(const Graph& g, const AuxiliaryOptions& options = {});

/// A closed walk e0, e1, ..., e_{k-1}, e0 in G* of odd length k >= 3, with
/// distinct entries; proves chi(G*) >= 3 and hence no 2-threshold cover.
struct OddCycleCertificate {
  std::vector<EdgeId> cycle;
};

bool is_valid_certificate(const AuxiliaryGraph& aux, const OddCycleCertificate& cert);

/// True iff every G*-edge has one end in class one and the other in class two.
bool is_valid_partition(const AuxiliaryGraph& aux, const TriPartition& tp);

using ColoringResult = std::variant<TriPartition, OddCycleCertificate>;

/// Lexicographic 2-coloring of the non-trivial components of G*: in each one,
/// the smallest vertex under pair_lex_compare(order, .) gets class one and
/// the rest of the component is forced by BFS. Isolated vertices stay free.
/// Returns an odd cycle for the first (by component number) non-bipartite
/// component instead.
ColoringResult two_color(const AuxiliaryGraph& aux, const Graph& g, const VertexOrdering& order);

}  // namespace thcover
