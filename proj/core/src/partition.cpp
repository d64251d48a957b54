#include "thcover/partition.hpp"

#include "thcover/error.hpp"
#include "thcover/io.hpp"

namespace thcover {

std::vector<EdgeId> TriPartition::members(EdgeClass c) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < size(); ++e) {
    if ((*this)[e] == c) out.push_back(e);
  }
  return out;
}

std::array<std::size_t, 3> TriPartition::class_sizes() const {
  std::array<std::size_t, 3> sizes{};
  for (EdgeClass c : classes_) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

TriPartition make_partition(const Graph& g, const std::vector<EdgePair>& one,
                            const std::vector<EdgePair>& two) {
  TriPartition tp(g.edge_count());
  auto put = [&](const std::vector<EdgePair>& edges, EdgeClass c) {
    for (EdgePair e : edges) {
      const EdgeId id = g.edge_id(e.u, e.v);
      if (id == kNoEdge) throw PreconditionError(format_edge(e) + " is not an edge");
      tp.assign(id, c);
    }
  };
  put(one, EdgeClass::one);
  put(two, EdgeClass::two);
  return tp;
}

PairClassTable::PairClassTable(const Graph& g, const TriPartition& tp)
    : n_(static_cast<std::size_t>(g.vertex_count())), table_(n_ * n_, -1) {
  if (tp.size() != g.edge_count()) throw PreconditionError("partition size does not match graph");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const auto k = static_cast<std::int8_t>(tp[e]);
    table_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] = k;
    table_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(u)] = k;
  }
}

}  // namespace thcover
