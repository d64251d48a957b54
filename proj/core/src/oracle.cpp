#include "thcover/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "thcover/error.hpp"
#include "thcover/io.hpp"
#include "thcover/structures.hpp"

namespace thcover {
namespace {

class AdjacencyTable {
 public:
  explicit AdjacencyTable(const Graph& g)
      : n_(static_cast<std::size_t>(g.vertex_count())), cells_(n_ * n_, 0) {
    for (const EdgePair& e : g.edges()) {
      cells_[idx(e.u, e.v)] = 1;
      cells_[idx(e.v, e.u)] = 1;
    }
  }
  bool operator()(Vertex a, Vertex b) const { return cells_[idx(a, b)] != 0; }

 private:
  std::size_t idx(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
  }
  std::size_t n_;
  std::vector<char> cells_;
};

// Whether ab, cd (as given) close an alternating 4-cycle a, b, c, d, a.
bool alternating(const AdjacencyTable& adj, Vertex a, Vertex b, Vertex c, Vertex d) {
  if (a == c || a == d || b == c || b == d) return false;
  return !adj(b, c) && !adj(a, d);
}

bool opposite_by_definition(const AdjacencyTable& adj, EdgePair e, EdgePair f) {
  for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    for (auto [c, d] : {std::pair{f.u, f.v}, std::pair{f.v, f.u}}) {
      if (alternating(adj, a, b, c, d)) return true;
    }
  }
  return false;
}

std::vector<std::vector<EdgeId>> opposite_lists(const Graph& g, const AdjacencyTable& adj) {
  const auto edges = g.edges();
  std::vector<std::vector<EdgeId>> out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && opposite_by_definition(adj, edges[i], edges[j])) {
        out[i].push_back(static_cast<EdgeId>(j));
      }
    }
  }
  return out;
}

bool parity_bipartite(const std::vector<std::vector<EdgeId>>& nbrs) {
  std::vector<int> side(nbrs.size(), -1);
  for (std::size_t s = 0; s < nbrs.size(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t e = queue.front();
      queue.pop_front();
      for (EdgeId f : nbrs[e]) {
        if (side[f] == -1) {
          side[f] = 1 - side[e];
          queue.push_back(static_cast<std::size_t>(f));
        } else if (side[f] == side[e]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Depth-first assignment of edges (in index order) to part masks 1, 2, 3.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const AdjacencyTable& adj, std::vector<bool> nontrivial)
      : g_(g),
        adj_(adj),
        nontrivial_(std::move(nontrivial)),
        n_(static_cast<std::size_t>(g.vertex_count())),
        mask_(n_ * n_, 0) {}

  bool run(EdgeId next = 0) {
    if (next == g_.edge_count()) return true;
    static constexpr std::uint8_t kIsolatedChoices[] = {3, 1, 2};
    static constexpr std::uint8_t kColoredChoices[] = {1, 2};
    const auto choices = nontrivial_[next] ? std::span<const std::uint8_t>(kColoredChoices)
                                           : std::span<const std::uint8_t>(kIsolatedChoices);
    const auto [u, v] = g_.edge(next);
    for (std::uint8_t choice : choices) {
      set(u, v, choice);
      if (consistent(next, 1) && consistent(next, 2) && run(next + 1)) return true;
    }
    set(u, v, 0);
    return false;
  }

  std::uint8_t choice(EdgeId e) const { return at(g_.edge(e).u, g_.edge(e).v); }

 private:
  // +1 in part, -1 certainly not in part, 0 undecided.
  int status(Vertex a, Vertex b, int part) const {
    if (!adj_(a, b)) return -1;
    const std::uint8_t m = at(a, b);
    if (m == 0) return 0;
    return (m & part) != 0 ? 1 : -1;
  }

  // Looks for an alternating 4-cycle inside `part` that uses edge `e` and
  // only decided pairs.
  bool consistent(EdgeId e, int part) const {
    const auto [x, y] = g_.edge(e);
    const Vertex n = g_.vertex_count();
    if (status(x, y, part) == 1) {
      for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
        for (EdgeId f = 0; f < e; ++f) {
          const auto [p, q] = g_.edge(f);
          if (status(p, q, part) != 1) continue;
          for (auto [c, d] : {std::pair{p, q}, std::pair{q, p}}) {
            if (a != c && a != d && b != c && b != d && status(b, c, part) == -1 &&
                status(a, d, part) == -1) {
              return false;
            }
          }
        }
      }
      return true;
    }
    // e is a G-edge outside the part: it can be the "bc" of a cycle ab, cd.
    for (auto [b, c] : {std::pair{x, y}, std::pair{y, x}}) {
      for (Vertex a = 0; a < n; ++a) {
        if (a == b || a == c || status(a, b, part) != 1) continue;
        for (Vertex d = 0; d < n; ++d) {
          if (d == a || d == b || d == c || status(c, d, part) != 1) continue;
          if (status(a, d, part) == -1) return false;
        }
      }
    }
    return true;
  }

  std::uint8_t at(Vertex a, Vertex b) const {
    return mask_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }
  void set(Vertex a, Vertex b, std::uint8_t m) {
    mask_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)] = m;
    mask_[static_cast<std::size_t>(b) * n_ + static_cast<std::size_t>(a)] = m;
  }

  const Graph& g_;
  const AdjacencyTable& adj_;
  std::vector<bool> nontrivial_;
  std::size_t n_;
  std::vector<std::uint8_t> mask_;
};

}  // namespace

bool threshold_by_definition(const Graph& g) {
  const AdjacencyTable adj(g);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (opposite_by_definition(adj, edges[i], edges[j])) return false;
    }
  }
  return true;
}

BruteForceResult brute_force_two_threshold(const Graph& g) {
  if (g.edge_count() > kBruteForceEdgeLimit) {
    throw PreconditionError("brute-force oracle limited to " +
                            std::to_string(kBruteForceEdgeLimit) + " edges");
  }
  const AdjacencyTable adj(g);
  const auto opposite = opposite_lists(g, adj);
  std::vector<bool> nontrivial(opposite.size());
  for (std::size_t i = 0; i < opposite.size(); ++i) nontrivial[i] = !opposite[i].empty();

  CoverSearch search(g, adj, std::move(nontrivial));
  BruteForceResult result;
  if (!search.run()) return result;
  result.yes = true;
  result.cover.emplace();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (search.choice(e) & 1) result.cover->first.push_back(e);
    if (search.choice(e) & 2) result.cover->second.push_back(e);
  }
  return result;
}

BruteChainResult brute_force_two_chain(const Graph& g) {
  const EdgeId m = g.edge_count();
  if (m > kBruteForceEdgeLimit) {
    throw PreconditionError("brute-force chain oracle limited to " +
                            std::to_string(kBruteForceEdgeLimit) + " edges");
  }
  const AdjacencyTable adj(g);
  const auto edges = g.edges();

  // cross[i][j]: bitmask of the G-edges joining an end of i to an end of j.
  // Edges i, j induce 2K2 inside a subset S iff both are in S and S contains
  // none of cross[i][j].
  struct DisjointPair {
    std::uint32_t both;
    std::uint32_t cross;
  };
  std::vector<DisjointPair> pairs;
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j = i + 1; j < m; ++j) {
      if (!edges[i].disjoint(edges[j])) continue;
      std::uint32_t cross = 0;
      for (Vertex a : {edges[i].u, edges[i].v}) {
        for (Vertex b : {edges[j].u, edges[j].v}) {
          if (adj(a, b)) cross |= 1u << g.edge_id(a, b);
        }
      }
      pairs.push_back({(1u << i) | (1u << j), cross});
    }
  }

  const std::uint32_t full = (1u << m) - 1;
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<char> chain(subsets, 1);
  for (std::size_t s = 0; s < subsets; ++s) {
    const auto set = static_cast<std::uint32_t>(s);
    for (const auto& p : pairs) {
      if ((set & p.both) == p.both && (set & p.cross) == 0) {
        chain[s] = 0;
        break;
      }
    }
  }
  // inside[s]: some 2K2-free subset contains s.
  std::vector<char> inside = chain;
  for (EdgeId b = 0; b < m; ++b) {
    for (std::size_t s = 0; s < subsets; ++s) {
      if (!(s >> b & 1)) inside[s] = inside[s] || inside[s | (std::size_t{1} << b)];
    }
  }

  BruteChainResult result;
  for (std::size_t s = 0; s < subsets; ++s) {
    const std::uint32_t rest = full & ~static_cast<std::uint32_t>(s);
    if (!chain[s] || !inside[rest]) continue;
    std::uint32_t other = rest;
    for (std::size_t t = 0; t < subsets; ++t) {
      if (chain[t] && (t & rest) == rest) {
        other = static_cast<std::uint32_t>(t);
        break;
      }
    }
    result.yes = true;
    for (EdgeId e = 0; e < m; ++e) {
      if (s >> e & 1) result.first.push_back(e);
      if (other >> e & 1) result.second.push_back(e);
    }
    break;
  }
  return result;
}

std::string_view gen_mode_name(GenMode mode) {
  switch (mode) {
    case GenMode::exhaustive: return "exhaustive";
    case GenMode::random_gnp: return "random-gnp";
    case GenMode::union_of_two_threshold: return "union-of-two-threshold";
    case GenMode::union_of_two_chain: return "union-of-two-chain";
    case GenMode::random_split: return "random-split";
  }
  return "?";
}

std::optional<GenMode> gen_mode_from_name(std::string_view name) {
  for (GenMode m : {GenMode::exhaustive, GenMode::random_gnp, GenMode::union_of_two_threshold,
                    GenMode::union_of_two_chain, GenMode::random_split}) {
    if (gen_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

void validate(const GenSpec& spec) {
  if (spec.n < 0) throw PreconditionError("negative vertex count");
  if (spec.mode == GenMode::exhaustive && spec.n > 7) {
    throw PreconditionError("exhaustive generation is limited to 7 vertices");
  }
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw PreconditionError("probability outside [0, 1]");
  if (spec.min_n && (*spec.min_n < 0 || *spec.min_n > spec.n)) {
    throw PreconditionError("min_n must lie in [0, n]");
  }
}

GraphGenerator::GraphGenerator(GenSpec spec) : spec_(spec), rng_(spec.seed) { validate(spec_); }

std::size_t GraphGenerator::size() const {
  if (spec_.mode != GenMode::exhaustive) return spec_.count;
  const auto pairs = static_cast<std::size_t>(spec_.n) * static_cast<std::size_t>(spec_.n - 1) / 2;
  return std::size_t{1} << (spec_.n < 2 ? 0 : pairs);
}

std::optional<Graph> GraphGenerator::next() {
  if (emitted_ >= size()) return std::nullopt;
  const std::size_t index = emitted_++;
  if (spec_.mode != GenMode::exhaustive) return random_graph();

  std::vector<EdgePair> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < spec_.n; ++u) {
    for (Vertex v = u + 1; v < spec_.n; ++v, ++bit) {
      if (index >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(spec_.n, std::move(edges));
}

Graph random_threshold_graph(Vertex n, double p, std::mt19937_64& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution dominating(p);
  std::vector<EdgePair> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!dominating(rng)) continue;
    for (std::size_t j = 0; j < i; ++j) edges.emplace_back(order[i], order[j]);
  }
  return Graph(n, std::move(edges));
}

namespace {

Graph union_of(Vertex n, const Graph& a, const Graph& b) {
  std::vector<EdgePair> edges(a.edges().begin(), a.edges().end());
  for (const EdgePair& e : b.edges()) {
    if (!a.adjacent(e.u, e.v)) edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

Graph random_chain_graph(const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                         Vertex n, std::mt19937_64& rng) {
  std::vector<Vertex> l = left;
  std::vector<Vertex> r = right;
  std::shuffle(l.begin(), l.end(), rng);
  std::shuffle(r.begin(), r.end(), rng);
  std::uniform_int_distribution<std::size_t> reach(0, r.size());
  std::vector<std::size_t> prefix(l.size());
  for (auto& k : prefix) k = reach(rng);
  std::sort(prefix.rbegin(), prefix.rend());
  std::vector<EdgePair> edges;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < prefix[i]; ++j) edges.emplace_back(l[i], r[j]);
  }
  return Graph(n, std::move(edges));
}

}  // namespace

Graph GraphGenerator::random_graph() {
  Vertex n = spec_.n;
  if (spec_.min_n) n = std::uniform_int_distribution<Vertex>(*spec_.min_n, spec_.n)(rng_);
  std::bernoulli_distribution coin(spec_.p);

  switch (spec_.mode) {
    case GenMode::random_gnp: {
      std::vector<EdgePair> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (coin(rng_)) edges.emplace_back(u, v);
        }
      }
      return Graph(n, std::move(edges));
    }
    case GenMode::union_of_two_threshold: {
      const Graph a = random_threshold_graph(n, spec_.p, rng_);
      const Graph b = random_threshold_graph(n, spec_.p, rng_);
      return union_of(n, a, b);
    }
    case GenMode::union_of_two_chain: {
      if (n < 2) return Graph(n, {});
      const Vertex split = std::uniform_int_distribution<Vertex>(1, n - 1)(rng_);
      std::vector<Vertex> left(static_cast<std::size_t>(split));
      std::vector<Vertex> right(static_cast<std::size_t>(n - split));
      std::iota(left.begin(), left.end(), 0);
      std::iota(right.begin(), right.end(), split);
      const Graph a = random_chain_graph(left, right, n, rng_);
      const Graph b = random_chain_graph(left, right, n, rng_);
      return union_of(n, a, b);
    }
    case GenMode::random_split: {
      std::vector<Vertex> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng_);
      const auto k = std::uniform_int_distribution<std::size_t>(0, order.size())(rng_);
      std::vector<EdgePair> edges;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          if (j < k || coin(rng_)) edges.emplace_back(order[i], order[j]);
        }
      }
      return Graph(n, std::move(edges));
    }
    case GenMode::exhaustive:
      break;
  }
  throw PreconditionError("exhaustive mode has no random graphs");
}

std::vector<std::string> check_instance(const Graph& g, bool expect_yes) {
  std::vector<std::string> problems;
  auto fail = [&](const std::string& what) { problems.push_back(what); };

  const AdjacencyTable adj(g);
  const bool bipartite = parity_bipartite(opposite_lists(g, adj));

  CoverResult result;
  try {
    result = two_threshold_cover(g);
  } catch (const InternalError& e) {
    fail(std::string("internal error: ") + e.what());
    return problems;
  }
  const bool yes = result.has_cover();
  if (yes != bipartite) fail("cover answer disagrees with bipartiteness of G*");
  if (expect_yes && !yes) fail("generator guarantees a cover but none was found");
  if (g.edge_count() <= kBruteForceEdgeLimit) {
    const BruteForceResult brute = brute_force_two_threshold(g);
    if (brute.yes != bipartite) fail("brute-force oracle disagrees with bipartiteness of G*");
    if (brute.yes && !verify_cover(g, brute.cover->first, brute.cover->second)) {
      fail("brute-force oracle returned an invalid cover");
    }
  }
  if (!yes) return problems;

  if (!verify_cover(g, result.cover->first, result.cover->second)) fail("cover does not verify");
  if (detect_pentagon(g, result.coloring, true)) fail("strict pentagon after coloring");
  if (detect_switching(g, result.coloring, SwitchingKind::path, true)) {
    fail("strict switching path after coloring");
  }
  if (detect_pentagon(g, result.final_partition, false)) fail("pentagon after recoloring");
  if (detect_switching(g, result.final_partition, SwitchingKind::path, false)) {
    fail("switching path after recoloring");
  }
  if (detect_switching(g, result.final_partition, SwitchingKind::cycle, false)) {
    fail("switching cycle after recoloring");
  }
  return problems;
}

SweepReport equivalence_sweep(const GenSpec& spec) {
  GraphGenerator gen(spec);
  const bool expect_yes = spec.mode == GenMode::union_of_two_threshold;
  SweepReport report;
  while (std::optional<Graph> g = gen.next()) {
    ++report.instances;
    if (g->edge_count() <= kBruteForceEdgeLimit) ++report.brute_checked;
    const std::vector<std::string> problems = check_instance(*g, expect_yes);
    // Recomputing the answer keeps the counters independent of problem text.
    const bool yes = parity_bipartite(opposite_lists(*g, AdjacencyTable(*g)));
    ++(yes ? report.yes : report.no);
    if (problems.empty()) continue;
    ++report.failures;
    if (report.failure_messages.size() < 10) {
      std::string msg = "seed " + std::to_string(spec.seed) + ", instance " +
                        std::to_string(report.instances - 1) + ":";
      for (const auto& p : problems) msg += " " + p + ";";
      msg += "\n" + serialize_graph(*g);
      report.failure_messages.push_back(std::move(msg));
    }
  }
  return report;
}

}  // namespace thcover
