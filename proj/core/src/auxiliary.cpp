#include "thcover/auxiliary.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "thcover/error.hpp"

namespace thcover {

bool opposite_edges(const Graph& g, EdgePair e, EdgePair f) {
  if (!e.disjoint(f)) return false;
  // ab, cd opposite iff (bc, ad non-edges) or (bd, ac non-edges)
  return (!g.adjacent(e.v, f.u) && !g.adjacent(e.u, f.v)) ||
         (!g.adjacent(e.v, f.v) && !g.adjacent(e.u, f.u));
}

AuxiliaryGraph build_auxiliary(const Graph& g, const AuxiliaryOptions& options) {
  const EdgeId m = g.edge_count();
  const auto vm = static_cast<std::size_t>(m);
  const bool use_skip = !options.skip.empty();
  if (use_skip && options.skip.size() != vm) {
    throw PreconditionError("skip mask size does not match edge count");
  }

  std::vector<std::vector<EdgeId>> adj(vm);
  const auto edges = g.edges();
  for (EdgeId i = 0; i < m; ++i) {
    if (use_skip && options.skip[i]) continue;
    const EdgePair e = edges[i];
    for (EdgeId j = i + 1; j < m; ++j) {
      if (use_skip && options.skip[j]) continue;
      if (opposite_edges(g, e, edges[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }

  AuxiliaryGraph aux;
  aux.offset_.assign(vm + 1, 0);
  for (std::size_t i = 0; i < vm; ++i) aux.offset_[i + 1] = aux.offset_[i] + adj[i].size();
  aux.list_.reserve(aux.offset_.back());
  // adj[i] is ascending: lower neighbors were appended in increasing i, then
  // higher ones in increasing j.
  for (auto& row : adj) aux.list_.insert(aux.list_.end(), row.begin(), row.end());

  if (m <= options.dense_limit) {
    aux.dense_.assign(vm, VertexSet(vm));
    for (std::size_t i = 0; i < vm; ++i) {
      for (EdgeId j : adj[i]) aux.dense_[i].set(static_cast<std::size_t>(j));
    }
  }

  aux.component_.assign(vm, -1);
  aux.members_.reserve(vm);
  std::deque<EdgeId> queue;
  int next = 0;
  for (EdgeId s = 0; s < m; ++s) {
    if (aux.component_[s] != -1) continue;
    const std::size_t begin = aux.members_.size();
    aux.component_[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const EdgeId e = queue.front();
      queue.pop_front();
      aux.members_.push_back(e);
      for (EdgeId f : aux.neighbors(e)) {
        if (aux.component_[f] == -1) {
          aux.component_[f] = next;
          queue.push_back(f);
        }
      }
    }
    std::sort(aux.members_.begin() + static_cast<std::ptrdiff_t>(begin), aux.members_.end());
    aux.members_offset_.push_back(aux.members_.size());
    ++next;
  }
  return aux;
}

bool AuxiliaryGraph::adjacent(EdgeId e, EdgeId f) const {
  if (!dense_.empty()) return dense_[static_cast<std::size_t>(e)].test(static_cast<std::size_t>(f));
  const auto row = neighbors(e);
  return std::binary_search(row.begin(), row.end(), f);
}

std::span<const EdgeId> AuxiliaryGraph::neighbors(EdgeId e) const {
  const auto i = static_cast<std::size_t>(e);
  return std::span<const EdgeId>(list_).subspan(offset_[i], offset_[i + 1] - offset_[i]);
}

std::span<const EdgeId> AuxiliaryGraph::component_members(int c) const {
  const auto i = static_cast<std::size_t>(c);
  return std::span<const EdgeId>(members_).subspan(members_offset_[i],
                                                   members_offset_[i + 1] - members_offset_[i]);
}

std::vector<std::pair<EdgeId, EdgeId>> AuxiliaryGraph::edge_list() const {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  out.reserve(edge_count());
  for (EdgeId e = 0; e < vertex_count(); ++e) {
    for (EdgeId f : neighbors(e)) {
      if (e < f) out.emplace_back(e, f);
    }
  }
  return out;
}

bool AuxiliaryGraph::bipartite() const {
  std::vector<int> side(static_cast<std::size_t>(vertex_count()), -1);
  for (int c = 0; c < component_count(); ++c) {
    const auto members = component_members(c);
    side[members.front()] = 0;
    std::deque<EdgeId> queue{members.front()};
    while (!queue.empty()) {
      const EdgeId e = queue.front();
      queue.pop_front();
      for (EdgeId f : neighbors(e)) {
        if (side[f] == -1) {
          side[f] = 1 - side[e];
          queue.push_back(f);
        } else if (side[f] == side[e]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_valid_certificate(const AuxiliaryGraph& aux, const OddCycleCertificate& cert) {
  const auto& cycle = cert.cycle;
  if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
  if (std::set<EdgeId>(cycle.begin(), cycle.end()).size() != cycle.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const EdgeId e = cycle[i];
    const EdgeId f = cycle[(i + 1) % cycle.size()];
    if (e < 0 || e >= aux.vertex_count() || f < 0 || f >= aux.vertex_count()) return false;
    if (!aux.adjacent(e, f)) return false;
  }
  return true;
}

bool is_valid_partition(const AuxiliaryGraph& aux, const TriPartition& tp) {
  if (tp.size() != aux.vertex_count()) return false;
  for (const auto& [e, f] : aux.edge_list()) {
    const EdgeClass a = tp[e];
    const EdgeClass b = tp[f];
    if (a == EdgeClass::free || b == EdgeClass::free || a == b) return false;
  }
  return true;
}

ColoringResult two_color(const AuxiliaryGraph& aux, const Graph& g, const VertexOrdering& order) {
  if (aux.vertex_count() != g.edge_count() || order.size() != g.vertex_count()) {
    throw PreconditionError("auxiliary graph, graph and ordering do not match");
  }
  const auto vm = static_cast<std::size_t>(aux.vertex_count());
  TriPartition tp(aux.vertex_count());
  std::vector<EdgeId> parent(vm, kNoEdge);
  std::vector<int> depth(vm, -1);

  for (int c = 0; c < aux.component_count(); ++c) {
    const auto members = aux.component_members(c);
    if (members.size() < 2) continue;

    const EdgeId root = *std::min_element(members.begin(), members.end(), [&](EdgeId a, EdgeId b) {
      return pair_lex_compare(order, g.edge(a), g.edge(b)) < 0;
    });
    depth[root] = 0;
    tp.assign(root, EdgeClass::one);
    std::deque<EdgeId> queue{root};
    while (!queue.empty()) {
      const EdgeId e = queue.front();
      queue.pop_front();
      for (EdgeId f : aux.neighbors(e)) {
        if (depth[f] == -1) {
          depth[f] = depth[e] + 1;
          parent[f] = e;
          tp.assign(f, opposite(tp[e]));
          queue.push_back(f);
        } else if (tp[f] == tp[e]) {
          // Same parity: tree paths from e and f to their meeting point plus
          // the edge ef close an odd cycle.
          std::vector<EdgeId> up{e};
          std::vector<EdgeId> down{f};
          EdgeId x = e;
          EdgeId y = f;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              x = parent[x];
              up.push_back(x);
            } else {
              y = parent[y];
              down.push_back(y);
            }
          }
          down.pop_back();  // meeting point is already the last entry of up
          OddCycleCertificate cert;
          cert.cycle.assign(up.rbegin(), up.rend());
          cert.cycle.insert(cert.cycle.end(), down.begin(), down.end());
          return cert;
        }
      }
    }
  }
  return tp;
}

}  // namespace thcover
