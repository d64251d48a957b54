#include "thcover/recognition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "thcover/error.hpp"

namespace thcover {

bool is_alternating_four_cycle(const Graph& g, const AlternatingFourCycle& q) {
  const Vertex vs[] = {q.a, q.b, q.c, q.d};
  for (int i = 0; i < 4; ++i) {
    if (vs[i] < 0 || vs[i] >= g.vertex_count()) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (vs[i] == vs[j]) return false;
    }
  }
  return g.adjacent(q.a, q.b) && g.adjacent(q.c, q.d) && !g.adjacent(q.b, q.c) &&
         !g.adjacent(q.a, q.d);
}

std::optional<AlternatingFourCycle> find_alternating_four_cycle(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const EdgePair f = edges[j];
      if (!edges[i].disjoint(f)) continue;
      if (!g.adjacent(b, f.u) && !g.adjacent(a, f.v)) return AlternatingFourCycle{a, b, f.u, f.v};
      if (!g.adjacent(b, f.v) && !g.adjacent(a, f.u)) return AlternatingFourCycle{a, b, f.v, f.u};
    }
  }
  return std::nullopt;
}

ThresholdResult is_threshold(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> degree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(static_cast<std::size_t>(n), false);

  ThresholdResult result;
  Vertex remaining = n;
  while (remaining > 0) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (!removed[v] && (degree[v] == 0 || degree[v] == remaining - 1)) pick = v;
    }
    if (pick < 0) break;
    removed[pick] = true;
    --remaining;
    result.certificate.elimination.push_back(pick);
    for (Vertex w : g.neighbors(pick)) {
      if (!removed[w]) --degree[w];
    }
  }

  if (remaining == 0) {
    result.threshold = true;
    return result;
  }
  result.certificate.elimination.clear();
  result.certificate.violation = find_alternating_four_cycle(g);
  if (!result.certificate.violation) {
    throw InternalError("threshold elimination stuck but no alternating 4-cycle exists");
  }
  return result;
}

std::optional<Bipartition> find_bipartition(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  Bipartition parts;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

void check_bipartition(const Graph& g, const Bipartition& parts) {
  const Vertex n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  auto assign = [&](const std::vector<Vertex>& vs, int s) {
    for (Vertex v : vs) {
      if (v < 0 || v >= n) throw PreconditionError("bipartition vertex out of range");
      if (side[v] != -1) throw PreconditionError("bipartition lists a vertex twice");
      side[v] = s;
    }
  };
  assign(parts.left, 0);
  assign(parts.right, 1);
  if (std::find(side.begin(), side.end(), -1) != side.end()) {
    throw PreconditionError("bipartition does not cover every vertex");
  }
  for (const EdgePair& e : g.edges()) {
    if (side[e.u] == side[e.v]) throw PreconditionError("edge inside one side of the bipartition");
  }
}

ChainResult is_chain(const Graph& g, const Bipartition& parts) {
  check_bipartition(g, parts);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgePair e = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const EdgePair f = edges[j];
      if (!e.disjoint(f)) continue;
      if (!g.adjacent(e.u, f.u) && !g.adjacent(e.u, f.v) && !g.adjacent(e.v, f.u) &&
          !g.adjacent(e.v, f.v)) {
        return {false, std::pair{static_cast<EdgeId>(i), static_cast<EdgeId>(j)}};
      }
    }
  }
  return {true, std::nullopt};
}

std::optional<SplitPartition> split_partition(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  // Prefix [0, k) is the candidate clique; track whether it is one and how
  // many edges remain inside the suffix.
  std::vector<bool> in_prefix(static_cast<std::size_t>(n), false);
  long long suffix_edges = g.edge_count();
  bool prefix_clique = true;
  for (Vertex k = 0;; ++k) {
    if (prefix_clique && suffix_edges == 0) {
      SplitPartition split;
      split.clique.assign(by_degree.begin(), by_degree.begin() + k);
      split.independent.assign(by_degree.begin() + k, by_degree.end());
      // At most one independent vertex can see the whole clique; moving it
      // over makes the clique maximal.
      for (auto it = split.independent.begin(); it != split.independent.end(); ++it) {
        if (g.degree(*it) == k) {
          split.clique.push_back(*it);
          split.independent.erase(it);
          break;
        }
      }
      std::sort(split.clique.begin(), split.clique.end());
      std::sort(split.independent.begin(), split.independent.end());
      return split;
    }
    if (k == n) break;
    const Vertex v = by_degree[k];
    Vertex into_prefix = 0;
    for (Vertex w : g.neighbors(v)) {
      if (in_prefix[w]) {
        ++into_prefix;
      } else {
        --suffix_edges;
      }
    }
    if (into_prefix != k) prefix_clique = false;
    if (!prefix_clique) break;
    in_prefix[v] = true;
  }
  return std::nullopt;
}

ParagliderResult is_paraglider_free(const Graph& g) {
  auto witness = find_induced(g, Pattern::paraglider);
  return {!witness.has_value(), std::move(witness)};
}

}  // namespace thcover
