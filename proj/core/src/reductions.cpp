#include "thcover/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "thcover/lexbfs.hpp"

namespace thcover {

ParagliderFound::ParagliderFound(PatternWitness witness)
    : PreconditionError("graph contains an induced paraglider"), witness_(std::move(witness)) {}

CoverResult split_cover(const Graph& g, std::optional<std::uint64_t> shuffle_seed) {
  if (!split_partition(g)) throw PreconditionError("graph is not a split graph");
  std::vector<Vertex> sequence(static_cast<std::size_t>(g.vertex_count()));
  std::iota(sequence.begin(), sequence.end(), 0);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(sequence.begin(), sequence.end(), rng);
  }
  const AuxiliaryGraph aux = build_auxiliary(g);
  return run_cover_pipeline(g, aux, VertexOrdering(std::move(sequence)), false, true, true);
}

CoverResult paraglider_free_cover(const Graph& g) {
  if (auto witness = find_induced(g, Pattern::paraglider)) throw ParagliderFound(*witness);
  const AuxiliaryGraph aux = build_auxiliary(g);
  CoverResult result = run_cover_pipeline(g, aux, lexbfs(g), false, true, true);
  result.diagnostics.lexbfs_ordering = true;
  return result;
}

std::vector<bool> HatGraph::fill_mask() const {
  std::vector<bool> mask(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) mask[i] = original[i] == kNoEdge;
  return mask;
}

HatGraph hat_graph(const Graph& g, const Bipartition& parts, CliqueSide side) {
  check_bipartition(g, parts);
  const std::vector<Vertex>& clique = side == CliqueSide::left ? parts.left : parts.right;

  std::vector<EdgePair> edges(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
  }
  HatGraph hat{Graph(g.vertex_count(), std::move(edges)), {}};
  hat.original.resize(static_cast<std::size_t>(hat.graph.edge_count()));
  for (EdgeId e = 0; e < hat.graph.edge_count(); ++e) {
    const EdgePair p = hat.graph.edge(e);
    hat.original[e] = g.edge_id(p.u, p.v);
  }
  return hat;
}

ChainCoverResult two_chain_cover(const Graph& g, std::optional<CliqueSide> side) {
  std::optional<Bipartition> parts = find_bipartition(g);
  if (!parts) throw PreconditionError("graph is not bipartite");
  const CliqueSide chosen =
      side.value_or(parts->left.size() <= parts->right.size() ? CliqueSide::left
                                                              : CliqueSide::right);
  const HatGraph hat = hat_graph(g, *parts, chosen);

  // Fill edges are isolated in the auxiliary graph of Ĝ, so they need not be
  // tested; the coloring then costs O(|E(G)|^2) rather than O(|E(Ĝ)|^2).
  AuxiliaryOptions options;
  options.skip = hat.fill_mask();
  const AuxiliaryGraph aux = build_auxiliary(hat.graph, options);
  CoverResult result = run_cover_pipeline(hat.graph, aux,
                                          VertexOrdering::identity(g.vertex_count()), false,
                                          true, true);
  if (result.odd_cycle) {
    OddCycleCertificate cert;
    for (EdgeId e : result.odd_cycle->cycle) cert.cycle.push_back(hat.original[e]);
    return cert;
  }
  ChainCover cover{std::move(*parts), {}, {}};
  auto project = [&](const std::vector<EdgeId>& part, std::vector<EdgeId>& out) {
    for (EdgeId e : part) {
      if (!hat.is_fill(e)) out.push_back(hat.original[e]);
    }
    std::sort(out.begin(), out.end());
  };
  project(result.cover->first, cover.first);
  project(result.cover->second, cover.second);
  return cover;
}

}  // namespace thcover
