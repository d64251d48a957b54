#pragma once

#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thcover/graph.hpp"
#include "thcover/partition.hpp"
#include "thcover/patterns.hpp"

namespace thcover::testing {

/// Graph from 1-based pairs.
Graph make_graph(Vertex n, const std::vector<std::pair<int, int>>& pairs);

/// Space-separated two-digit edge names, e.g. "14 24 27" (1-based, n <= 9).
std::vector<EdgePair> pairs(std::string_view names);
std::vector<EdgeId> ids(const Graph& g, std::string_view names);
std::string names(const Graph& g, const std::vector<EdgeId>& ids);
TriPartition partition(const Graph& g, std::string_view one, std::string_view two);
VertexOrdering ordering(const std::vector<int>& one_based);

Graph example7();
Graph paraglider();
Graph cycle(Vertex n);
Graph path(Vertex n);
Graph complete(Vertex n);
Graph from_mask(Vertex n, std::uint64_t mask);
Graph gnp(Vertex n, double p, std::mt19937_64& rng);
/// Same graph with vertices renamed by `perm` (perm[v] is the new id of v).
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

std::string data_path(std::string_view file);

// Oracles. None of these go through the library's algorithms.

/// Label simulation: labels are lists of decreasing stamps, the largest one
/// wins. `rng` null means smallest id among ties, else a random tie.
std::vector<Vertex> naive_lexbfs(const Graph& g, std::mt19937_64* rng = nullptr);
/// True iff each step picks a vertex with a maximal label.
bool naive_is_lexbfs(const Graph& g, const std::vector<Vertex>& order);

/// G*-edges from the quadruple definition, as pairs of 1-based names "ab".
std::set<std::pair<EdgePair, EdgePair>> naive_aux_edges(const Graph& g);
bool naive_aux_bipartite(const Graph& g);

/// Induced-pattern search over vertex subsets and all their permutations.
bool naive_contains(const Graph& g, Pattern p);

/// No 2K2, P4 or C4 among all 4-subsets, from adjacency alone.
bool naive_threshold(const Graph& g);

}  // namespace thcover::testing
