#include "support.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

namespace thcover::testing {

Graph make_graph(Vertex n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<EdgePair> edges;
  for (auto [u, v] : pairs) edges.emplace_back(u - 1, v - 1);
  return Graph(n, std::move(edges));
}

std::vector<EdgePair> pairs(std::string_view names) {
  std::vector<EdgePair> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == ' ') continue;
    out.emplace_back(names[i] - '1', names[i + 1] - '1');
    ++i;
  }
  return out;
}

std::vector<EdgeId> ids(const Graph& g, std::string_view names) {
  std::vector<EdgeId> out;
  for (EdgePair p : pairs(names)) out.push_back(g.edge_id(p.u, p.v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string names(const Graph& g, const std::vector<EdgeId>& ids) {
  std::vector<std::string> parts;
  for (EdgeId e : ids) {
    parts.push_back(std::to_string(g.edge(e).u + 1) + std::to_string(g.edge(e).v + 1));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

TriPartition partition(const Graph& g, std::string_view one, std::string_view two) {
  return make_partition(g, pairs(one), pairs(two));
}

VertexOrdering ordering(const std::vector<int>& one_based) {
  std::vector<Vertex> seq;
  for (int v : one_based) seq.push_back(v - 1);
  return VertexOrdering(std::move(seq));
}

Graph example7() {
  return make_graph(7, {{1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {3, 5},
                        {3, 6}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {6, 7}});
}

Graph paraglider() {
  return make_graph(5, {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

Graph cycle(Vertex n) {
  std::vector<EdgePair> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path(Vertex n) {
  std::vector<EdgePair> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete(Vertex n) {
  std::vector<EdgePair> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph from_mask(Vertex n, std::uint64_t mask) {
  std::vector<EdgePair> e;
  int bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph gnp(Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<EdgePair> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<EdgePair> e;
  for (EdgePair p : g.edges()) e.emplace_back(perm[p.u], perm[p.v]);
  return Graph(g.vertex_count(), e);
}

std::string data_path(std::string_view file) {
  return std::string(THCOVER_TEST_DATA) + "/" + std::string(file);
}

namespace {

std::vector<std::vector<bool>> matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (EdgePair p : g.edges()) adj[p.u][p.v] = adj[p.v][p.u] = true;
  return adj;
}

}  // namespace

std::vector<Vertex> naive_lexbfs(const Graph& g, std::mt19937_64* rng) {
  const Vertex n = g.vertex_count();
  const auto adj = matrix(g);
  std::vector<std::vector<int>> label(n);
  std::vector<bool> placed(n, false);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    std::vector<Vertex> best;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best.empty() || label[v] > label[best[0]]) {
        best = {v};
      } else if (label[v] == label[best[0]]) {
        best.push_back(v);
      }
    }
    Vertex pick = best[0];
    if (rng) pick = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(*rng)];
    placed[pick] = true;
    order.push_back(pick);
    for (Vertex w = 0; w < n; ++w) {
      if (!placed[w] && adj[pick][w]) label[w].push_back(n - step);
    }
  }
  return order;
}

bool naive_is_lexbfs(const Graph& g, const std::vector<Vertex>& order) {
  const Vertex n = g.vertex_count();
  const auto adj = matrix(g);
  std::vector<std::vector<int>> label(n);
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    const Vertex pick = order[step];
    for (Vertex v = 0; v < n; ++v) {
      if (!placed[v] && label[v] > label[pick]) return false;
    }
    placed[pick] = true;
    for (Vertex w = 0; w < n; ++w) {
      if (!placed[w] && adj[pick][w]) label[w].push_back(n - step);
    }
  }
  return true;
}

std::set<std::pair<EdgePair, EdgePair>> naive_aux_edges(const Graph& g) {
  const Vertex n = g.vertex_count();
  const auto adj = matrix(g);
  std::set<std::pair<EdgePair, EdgePair>> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c)
        for (Vertex d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (adj[a][b] && adj[c][d] && !adj[b][c] && !adj[a][d]) {
            EdgePair x(a, b), y(c, d);
            out.insert(x < y ? std::pair{x, y} : std::pair{y, x});
          }
        }
  return out;
}

bool naive_aux_bipartite(const Graph& g) {
  const auto edges = naive_aux_edges(g);
  std::vector<EdgePair> nodes;
  for (auto [x, y] : edges) {
    nodes.push_back(x);
    nodes.push_back(y);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto index = [&](EdgePair p) {
    return std::lower_bound(nodes.begin(), nodes.end(), p) - nodes.begin();
  };
  std::vector<std::vector<std::size_t>> nbr(nodes.size());
  for (auto [x, y] : edges) {
    nbr[index(x)].push_back(index(y));
    nbr[index(y)].push_back(index(x));
  }
  std::vector<int> side(nodes.size(), -1);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      for (auto y : nbr[x]) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct Shape {
  int k;
  std::vector<std::pair<int, int>> edges;
};

Shape shape(Pattern p) {
  switch (p) {
    case Pattern::two_k2: return {4, {{0, 1}, {2, 3}}};
    case Pattern::p4: return {4, {{0, 1}, {1, 2}, {2, 3}}};
    case Pattern::c4: return {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
    case Pattern::c5: return {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}};
    case Pattern::paraglider:
      // complement of the path 2-0-3 plus the edge 1-4
      return {5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}};
  }
  return {};
}

}  // namespace

bool naive_contains(const Graph& g, Pattern p) {
  const Shape s = shape(p);
  const Vertex n = g.vertex_count();
  if (n < s.k) return false;
  const auto adj = matrix(g);
  std::vector<std::vector<bool>> want(s.k, std::vector<bool>(s.k, false));
  for (auto [a, b] : s.edges) want[a][b] = want[b][a] = true;

  std::vector<bool> pick(n, false);
  std::fill(pick.end() - s.k, pick.end(), true);
  do {
    std::vector<Vertex> sub;
    for (Vertex v = 0; v < n; ++v)
      if (pick[v]) sub.push_back(v);
    do {
      bool match = true;
      for (int i = 0; i < s.k && match; ++i)
        for (int j = i + 1; j < s.k && match; ++j)
          match = adj[sub[i]][sub[j]] == want[i][j];
      if (match) return true;
    } while (std::next_permutation(sub.begin(), sub.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

bool naive_threshold(const Graph& g) {
  return !naive_contains(g, Pattern::two_k2) && !naive_contains(g, Pattern::p4) &&
         !naive_contains(g, Pattern::c4);
}

}  // namespace thcover::testing
