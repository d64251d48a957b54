#include "thcover/structures.hpp"

#include "thcover/error.hpp"

namespace thcover {

std::optional<PentagonWitness> detect_pentagon(const Graph& g, const TriPartition& tp,
                                               bool strict_only) {
  const PairClassTable t(g, tp);
  const Vertex n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.neighbors(a)) {
      for (EdgeClass cls : kColors) {
        if (!t.in(a, b, cls)) continue;
        const EdgeClass other = opposite(cls);
        for (Vertex c : g.neighbors(b)) {
          if (c == a || g.adjacent(a, c) || !t.in(b, c, other)) continue;
          for (Vertex d : g.neighbors(c)) {
            if (d == a || d == b || g.adjacent(a, d) || !t.in(b, d, other)) continue;
            const bool strict = t.in(c, d, cls);
            if (!strict && (strict_only || !t.in(c, d, EdgeClass::free))) continue;
            for (Vertex e : g.neighbors(a)) {
              if (e == b || e == c || e == d || g.adjacent(b, e)) continue;
              if (t.in(a, e, cls) && t.in(e, c, other) && t.in(e, d, other)) {
                return PentagonWitness{{a, b, c, d, e}, cls, strict};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SwitchingWitness> detect_switching(const Graph& g, const TriPartition& tp,
                                                 SwitchingKind kind, bool strict_only) {
  const PairClassTable t(g, tp);
  const Vertex n = g.vertex_count();
  // Path (x, y, z, w) / cycle (a, b, c, d) share the shape of their first
  // three vertices; they differ in the closing pair.
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : g.neighbors(x)) {
      for (Vertex z : g.neighbors(y)) {
        if (z == x) continue;
        for (Vertex w : g.neighbors(z)) {
          if (w == x || w == y) continue;
          const bool closing_edge = g.adjacent(x, w);
          if ((kind == SwitchingKind::path) == closing_edge) continue;
          for (EdgeClass cls : kColors) {
            const EdgeClass other = opposite(cls);
            if (!t.in(y, z, other)) continue;
            if (kind == SwitchingKind::cycle && !t.in(x, w, other)) continue;
            const bool strict = t.in(x, y, cls) && t.in(z, w, cls);
            const bool loose = t.in_or_free(x, y, cls) && t.in_or_free(z, w, cls);
            if (strict_only ? strict : loose) {
              return SwitchingWitness{kind, {x, y, z, w}, cls, strict};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Ap6Witness> detect_ap6(const Graph& g, const TriPartition& coloring) {
  if (coloring.size() != g.edge_count()) throw PreconditionError("partition size does not match graph");
  for (EdgeId e = 0; e < coloring.size(); ++e) {
    if (coloring[e] == EdgeClass::free) {
      throw PreconditionError("AP6 detection needs every edge colored one or two");
    }
  }
  const PairClassTable t(g, coloring);
  const Vertex n = g.vertex_count();
  std::array<Vertex, 6> v{};
  auto fresh = [&](int upto, Vertex x) {
    for (int i = 0; i < upto; ++i) {
      if (v[i] == x) return false;
    }
    return true;
  };
  for (EdgeClass cls : kColors) {
    for (v[0] = 0; v[0] < n; ++v[0]) {
      for (Vertex v1 : g.neighbors(v[0])) {
        if (!t.in(v[0], v1, cls)) continue;
        v[1] = v1;
        for (v[2] = 0; v[2] < n; ++v[2]) {
          if (!fresh(2, v[2]) || g.adjacent(v[1], v[2])) continue;
          for (Vertex v3 : g.neighbors(v[2])) {
            if (!fresh(3, v3) || !t.in(v[2], v3, cls)) continue;
            v[3] = v3;
            for (v[4] = 0; v[4] < n; ++v[4]) {
              if (!fresh(4, v[4]) || g.adjacent(v[3], v[4])) continue;
              for (Vertex v5 : g.neighbors(v[4])) {
                if (!fresh(5, v5) || !t.in(v[4], v5, cls) || g.adjacent(v5, v[0])) continue;
                v[5] = v5;
                return Ap6Witness{v, cls};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace thcover
