#include "thcover/cover.hpp"

#include <algorithm>
#include <sstream>

#include "thcover/error.hpp"
#include "thcover/io.hpp"
#include "thcover/lexbfs.hpp"

namespace thcover {
namespace {

std::vector<VertexSet> class_neighborhoods(const Graph& g, const TriPartition& tp, EdgeClass c) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<VertexSet> out(n, VertexSet(n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (tp[e] != c) continue;
    const auto [u, v] = g.edge(e);
    out[u].set(v);
    out[v].set(u);
  }
  return out;
}

// True iff some pentagon of color `cls` has cd as its cd-edge.
bool has_pentagon_on(const Graph& g, const std::vector<VertexSet>& same,
                     const std::vector<VertexSet>& other, Vertex c, Vertex d) {
  const VertexSet middle = other[c] & other[d];
  if (!middle.any()) return false;
  VertexSet far = g.neighborhood(c) | g.neighborhood(d);
  far.flip();
  far.reset(c);
  far.reset(d);
  if (!far.any()) return false;

  for (auto b = middle.find_first(); b != VertexSet::npos; b = middle.find_next(b)) {
    const VertexSet apex_b = same[b] & far;
    if (!apex_b.any()) continue;
    for (auto e = middle.find_next(b); e != VertexSet::npos; e = middle.find_next(e)) {
      if (g.adjacent(static_cast<Vertex>(b), static_cast<Vertex>(e))) continue;
      if (apex_b.intersects(same[e])) return true;
    }
  }
  return false;
}

}  // namespace

RecolorSets compute_recolor_sets(const Graph& g, const TriPartition& tp) {
  if (tp.size() != g.edge_count()) throw PreconditionError("partition size does not match graph");
  RecolorSets sets;
  const std::vector<EdgeId> free_edges = tp.members(EdgeClass::free);
  if (free_edges.empty()) return sets;

  const auto in_one = class_neighborhoods(g, tp, EdgeClass::one);
  const auto in_two = class_neighborhoods(g, tp, EdgeClass::two);
  for (EdgeId id : free_edges) {
    const auto [c, d] = g.edge(id);
    const bool one_pentagon = has_pentagon_on(g, in_one, in_two, c, d);
    const bool two_pentagon = has_pentagon_on(g, in_two, in_one, c, d);
    if (one_pentagon && two_pentagon) {
      throw InternalError("edge " + format_edge(g.edge(id)) +
                          " is the cd-edge of pentagons in both colors");
    }
    if (one_pentagon) sets.to_two.push_back(id);
    if (two_pentagon) sets.to_one.push_back(id);
  }
  return sets;
}

TriPartition apply_recoloring(const TriPartition& tp, const RecolorSets& sets) {
  TriPartition out = tp;
  auto move = [&](const std::vector<EdgeId>& ids, EdgeClass c) {
    for (EdgeId e : ids) {
      if (tp[e] != EdgeClass::free) throw PreconditionError("recolored edge is not free");
      if (out[e] != EdgeClass::free) throw PreconditionError("recolor sets overlap");
      out.assign(e, c);
    }
  };
  move(sets.to_two, EdgeClass::two);
  move(sets.to_one, EdgeClass::one);
  return out;
}

ThresholdCover assemble_cover(const TriPartition& tp) {
  ThresholdCover cover;
  for (EdgeId e = 0; e < tp.size(); ++e) {
    const EdgeClass c = tp[e];
    if (c != EdgeClass::two) cover.first.push_back(e);
    if (c != EdgeClass::one) cover.second.push_back(e);
  }
  return cover;
}

CoverVerification check_cover(const Graph& g, std::span<const EdgeId> first,
                              std::span<const EdgeId> second) {
  CoverVerification report;
  std::vector<bool> covered(static_cast<std::size_t>(g.edge_count()), false);
  for (auto part : {first, second}) {
    for (EdgeId e : part) {
      if (e < 0 || e >= g.edge_count()) throw PreconditionError("cover references a non-edge");
      covered[e] = true;
    }
  }
  report.covers = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  auto judge = [&](std::span<const EdgeId> part) {
    ThresholdResult r = is_threshold(g.edge_subgraph(part));
    return PartReport{r.threshold, std::move(r.certificate)};
  };
  report.first = judge(first);
  report.second = judge(second);
  return report;
}

bool verify_cover(const Graph& g, std::span<const EdgeId> first, std::span<const EdgeId> second) {
  return check_cover(g, first, second).ok();
}

CoverResult run_cover_pipeline(const Graph& g, const AuxiliaryGraph& aux,
                               const VertexOrdering& order, bool recolor, bool verify,
                               bool strict_verify) {
  CoverResult result;
  Diagnostics& diag = result.diagnostics;
  diag.ordering = order;
  diag.aux_edges = aux.edge_count();
  for (int c = 0; c < aux.component_count(); ++c) {
    if (aux.component_members(c).size() > 1) ++diag.nontrivial_components;
  }

  ColoringResult colored = two_color(aux, g, order);
  if (auto* cert = std::get_if<OddCycleCertificate>(&colored)) {
    result.odd_cycle = std::move(*cert);
    return result;
  }
  result.coloring = std::get<TriPartition>(std::move(colored));
  diag.coloring_sizes = result.coloring.class_sizes();

  if (recolor) {
    diag.recolored = true;
    diag.recolor = compute_recolor_sets(g, result.coloring);
    result.final_partition = apply_recoloring(result.coloring, diag.recolor);
  } else {
    result.final_partition = result.coloring;
  }
  diag.final_sizes = result.final_partition.class_sizes();
  result.cover = assemble_cover(result.final_partition);

  if (verify) {
    diag.verification = check_cover(g, result.cover->first, result.cover->second);
    if (strict_verify && !diag.verification->ok()) {
      throw InternalError("assembled parts are not both threshold graphs");
    }
  }
  return result;
}

CoverResult two_threshold_cover(const Graph& g, const CoverOptions& options) {
  const bool use_lexbfs = !options.skip_phase1 && !options.ordering;
  VertexOrdering order = options.ordering ? *options.ordering
                         : use_lexbfs     ? lexbfs(g)
                                          : VertexOrdering::identity(g.vertex_count());
  if (order.size() != g.vertex_count()) {
    throw PreconditionError("ordering has " + std::to_string(order.size()) +
                            " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  const AuxiliaryGraph aux = build_auxiliary(g, options.auxiliary);
  // Only the untruncated pipeline carries the threshold guarantee.
  const bool full = use_lexbfs && !options.skip_phase3;
  CoverResult result =
      run_cover_pipeline(g, aux, order, !options.skip_phase3, options.verify, full);
  result.diagnostics.lexbfs_ordering = use_lexbfs;
  return result;
}

std::vector<std::string> Diagnostics::log(const Graph& g) const {
  std::vector<std::string> lines;
  auto sizes = [](const std::array<std::size_t, 3>& s) {
    return "free=" + std::to_string(s[0]) + " one=" + std::to_string(s[1]) +
           " two=" + std::to_string(s[2]);
  };
  lines.push_back(std::string("ordering (") + (lexbfs_ordering ? "lexbfs" : "given") +
                  "): " + format_ordering(ordering));
  lines.push_back("aux: edges=" + std::to_string(aux_edges) +
                  " nontrivial-components=" + std::to_string(nontrivial_components));
  lines.push_back("coloring: " + sizes(coloring_sizes));
  auto listed = [&](const std::vector<EdgeId>& ids) {
    return ids.empty() ? std::string("none") : format_edges(g, ids);
  };
  if (recolored) {
    lines.push_back("recolor to-two: " + listed(recolor.to_two));
    lines.push_back("recolor to-one: " + listed(recolor.to_one));
  } else {
    lines.push_back("recolor: skipped");
  }
  lines.push_back("final: " + sizes(final_sizes));
  return lines;
}

}  // namespace thcover
