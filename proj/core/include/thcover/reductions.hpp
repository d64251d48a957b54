#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "thcover/cover.hpp"
#include "thcover/error.hpp"
#include "thcover/patterns.hpp"
#include "thcover/recognition.hpp"

namespace thcover {

/// Thrown by paraglider_free_cover when the input contains a paraglider.
class ParagliderFound : public PreconditionError {
 public:
  explicit ParagliderFound(PatternWitness witness);
  const PatternWitness& witness() const noexcept { return witness_; }

 private:
  PatternWitness witness_;
};

/// Split graphs: lexicographic coloring under an arbitrary ordering (identity,
/// or a seeded shuffle when `shuffle_seed` is set) and no recoloring.
/// Throws PreconditionError if g is not split.
CoverResult split_cover(const Graph& g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Paraglider-free graphs: Lex-BFS and the lexicographic coloring, no
/// recoloring. Throws ParagliderFound otherwise.
CoverResult paraglider_free_cover(const Graph& g);

enum class CliqueSide { left, right };

/// Bipartite G with one side completed to a clique.
struct HatGraph {
  Graph graph;
  /// Per edge of `graph`: the matching edge id in G, or kNoEdge for fill.
  std::vector<EdgeId> original;

  bool is_fill(EdgeId e) const { return original[static_cast<std::size_t>(e)] == kNoEdge; }
  std::vector<bool> fill_mask() const;
};

/// Throws PreconditionError unless `parts` is a proper bipartition of g.
HatGraph hat_graph(const Graph& g, const Bipartition& parts, CliqueSide side);

/// Two chain subgraphs covering a bipartite graph; ascending edge ids of G.
struct ChainCover {
  Bipartition parts;
  std::vector<EdgeId> first;
  std::vector<EdgeId> second;
};

using ChainCoverResult = std::variant<ChainCover, OddCycleCertificate>;

/// 2-chain subgraph cover via the split graph Ĝ. The clique goes on the
/// smaller side unless `side` says otherwise. The odd cycle, if any, is in
/// terms of G's edge ids. Throws PreconditionError for non-bipartite input.
ChainCoverResult two_chain_cover(const Graph& g, std::optional<CliqueSide> side = std::nullopt);

}  // namespace thcover
