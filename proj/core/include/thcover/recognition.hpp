#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "thcover/graph.hpp"
#include "thcover/patterns.hpp"

namespace thcover {

/// a, b, c, d with ab, cd edges and bc, ad non-edges (all four distinct).
struct AlternatingFourCycle {
  Vertex a, b, c, d;

  friend bool operator==(const AlternatingFourCycle&, const AlternatingFourCycle&) = default;
};

bool is_alternating_four_cycle(const Graph& g, const AlternatingFourCycle& q);

/// First alternating 4-cycle in edge-index order (pairs e < f, both
/// labelings of f tried), or nothing iff g is threshold.
std::optional<AlternatingFourCycle> find_alternating_four_cycle(const Graph& g);

struct ThresholdCertificate {
  /// Set on success: each vertex is isolated or universal among the vertices
  /// not yet removed.
  std::vector<Vertex> elimination;
  /// Set on failure.
  std::optional<AlternatingFourCycle> violation;
};

struct ThresholdResult {
  bool threshold = false;
  ThresholdCertificate certificate;
};

/// Isolated/universal elimination, with an alternating-4-cycle scan as the
/// failure certificate. The two must agree; a disagreement throws
/// InternalError.
ThresholdResult is_threshold(const Graph& g);

/// (A, B) with every edge crossing. Used for chain graphs and Ĝ.
struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// BFS 2-coloring; the smallest vertex of each component goes left.
std::optional<Bipartition> find_bipartition(const Graph& g);

/// Throws PreconditionError unless `parts` partitions V(g) with all edges
/// crossing.
void check_bipartition(const Graph& g, const Bipartition& parts);

struct ChainResult {
  bool chain = false;
  /// Two edges whose endpoints induce 2K2.
  std::optional<std::pair<EdgeId, EdgeId>> witness;
};

ChainResult is_chain(const Graph& g, const Bipartition& parts);

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

/// Tries each prefix of the vertices sorted by descending degree (ties by id)
/// as the clique side.
std::optional<SplitPartition> split_partition(const Graph& g);

struct ParagliderResult {
  bool paraglider_free = true;
  std::optional<PatternWitness> witness;
};

ParagliderResult is_paraglider_free(const Graph& g);

}  // namespace thcover
