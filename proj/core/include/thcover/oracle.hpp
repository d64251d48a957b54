#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "thcover/cover.hpp"
#include "thcover/graph.hpp"

namespace thcover {

// Ground truth that does not go through the lexicographic machinery. Each
// oracle builds its own adjacency tables and checks thresholdness straight
// from the alternating-4-cycle definition.

inline constexpr EdgeId kBruteForceEdgeLimit = 20;

struct BruteForceResult {
  bool yes = false;
  std::optional<ThresholdCover> cover;
};

/// Searches all ways to put each edge into part one, part two or both for
/// two threshold parts covering E(g). Edges that lie on some alternating
/// 4-cycle can only go into one part, and the two opposite edges must go to
/// different parts, which prunes the search to proper 2-colorings of G* times
/// the three options for each remaining edge ("both" tried first).
/// Throws PreconditionError above kBruteForceEdgeLimit edges.
BruteForceResult brute_force_two_threshold(const Graph& g);

/// Same idea for chain subgraphs of a bipartite graph: enumerates every edge
/// subset, marks the 2K2-free ones, and asks whether some 2K2-free subset's
/// complement lies inside another 2K2-free subset. Limit 20 edges.
struct BruteChainResult {
  bool yes = false;
  std::vector<EdgeId> first;
  std::vector<EdgeId> second;
};
BruteChainResult brute_force_two_chain(const Graph& g);

/// Definition-level threshold test (no alternating 4-cycle), O(m^2).
bool threshold_by_definition(const Graph& g);

enum class GenMode { exhaustive, random_gnp, union_of_two_threshold, union_of_two_chain, random_split };

std::string_view gen_mode_name(GenMode mode);
std::optional<GenMode> gen_mode_from_name(std::string_view name);

struct GenSpec {
  Vertex n = 0;
  GenMode mode = GenMode::exhaustive;
  double p = 0.5;            ///< edge / dominating-vertex probability
  std::uint64_t seed = 1;
  std::size_t count = 1;     ///< number of graphs for random modes
  /// When set, random modes draw each graph's vertex count uniformly from
  /// [min_n, n].
  std::optional<Vertex> min_n;
};

/// Throws PreconditionError for invalid specs (exhaustive beyond 7
/// vertices, probability outside [0, 1], ...).
void validate(const GenSpec& spec);

/// Pull-style stream of graphs. Exhaustive mode yields every labeled graph on
/// n vertices once, in order of the edge bitmask; random modes yield `count`
/// graphs from a 64-bit seeded generator.
class GraphGenerator {
 public:
  explicit GraphGenerator(GenSpec spec);

  std::optional<Graph> next();
  /// Total number of graphs the stream will yield.
  std::size_t size() const;

 private:
  Graph random_graph();

  GenSpec spec_;
  std::size_t emitted_ = 0;
  std::mt19937_64 rng_;
};

/// One random threshold graph built by adding vertices in random order, each
/// dominating with probability p and isolated otherwise.
Graph random_threshold_graph(Vertex n, double p, std::mt19937_64& rng);

struct SweepReport {
  std::size_t instances = 0;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t brute_checked = 0;  ///< instances small enough for the brute oracle
  std::size_t failures = 0;
  std::vector<std::string> failure_messages;  ///< first few, with the graph serialized

  bool ok() const { return failures == 0; }
};

/// Per generated graph: G* bipartiteness (independent parity BFS), the
/// brute-force oracle (when within its limit) and two_threshold_cover must
/// agree. On YES instances the cover must verify, and the coloring and final
/// partitions must be free of the configurations the construction rules out
/// (strict pentagons and strict switching paths after the coloring; any
/// pentagon, switching path or switching cycle after recoloring). Generators
/// that guarantee a cover must yield YES.
SweepReport equivalence_sweep(const GenSpec& spec);

/// Checks a single graph as in equivalence_sweep; returns failure messages.
std::vector<std::string> check_instance(const Graph& g, bool expect_yes);

}  // namespace thcover
