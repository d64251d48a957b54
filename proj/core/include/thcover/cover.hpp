#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thcover/auxiliary.hpp"
#include "thcover/graph.hpp"
#include "thcover/partition.hpp"
#include "thcover/recognition.hpp"

namespace thcover {

/// Free edges that must leave the free class after the lexicographic
/// coloring: an edge cd is recolored when it is the cd of some pentagon.
/// Pentagons in class one push cd into class two, and vice versa.
struct RecolorSets {
  std::vector<EdgeId> to_two;  ///< cd of some class-one pentagon
  std::vector<EdgeId> to_one;  ///< cd of some class-two pentagon

  friend bool operator==(const RecolorSets&, const RecolorSets&) = default;
};

/// For each free edge cd and each color, collects B = {v : vc, vd in the other
/// color} and looks for non-adjacent b, e in B with a common class-colored
/// neighbor a outside N(c) and N(d). O(m * n^2 * n/64) with bitsets.
/// Throws InternalError if an edge lands in both sets.
RecolorSets compute_recolor_sets(const Graph& g, const TriPartition& tp);

TriPartition apply_recoloring(const TriPartition& tp, const RecolorSets& sets);

/// Two edge sets of G, ascending edge ids.
struct ThresholdCover {
  std::vector<EdgeId> first;
  std::vector<EdgeId> second;
};

/// first = class one + free, second = class two + free.
ThresholdCover assemble_cover(const TriPartition& tp);

struct PartReport {
  bool threshold = false;
  ThresholdCertificate certificate;
};

struct CoverVerification {
  bool covers = false;  ///< union is all of E(G)
  PartReport first;
  PartReport second;

  bool ok() const { return covers && first.threshold && second.threshold; }
};

CoverVerification check_cover(const Graph& g, std::span<const EdgeId> first,
                              std::span<const EdgeId> second);
bool verify_cover(const Graph& g, std::span<const EdgeId> first, std::span<const EdgeId> second);

struct CoverOptions {
  /// Replaces the Lex-BFS ordering. Implies skip_phase1.
  std::optional<VertexOrdering> ordering;
  /// Use `ordering`, or the identity when none is given, instead of Lex-BFS.
  bool skip_phase1 = false;
  /// Assemble the cover straight from the lexicographic coloring.
  bool skip_phase3 = false;
  /// Check both parts for thresholdness. On the full pipeline a failure
  /// throws InternalError; on truncated pipelines it is only reported.
  bool verify = true;
  AuxiliaryOptions auxiliary;
};

struct Diagnostics {
  VertexOrdering ordering;
  bool lexbfs_ordering = false;  ///< ordering came from Lex-BFS
  bool recolored = false;        ///< pentagon recoloring ran
  std::size_t aux_edges = 0;
  int nontrivial_components = 0;
  std::array<std::size_t, 3> coloring_sizes{};  ///< free/one/two after coloring
  std::array<std::size_t, 3> final_sizes{};
  RecolorSets recolor;
  std::optional<CoverVerification> verification;

  /// Human-readable, one line per entry.
  std::vector<std::string> log(const Graph& g) const;
};

struct CoverResult {
  std::optional<ThresholdCover> cover;
  std::optional<OddCycleCertificate> odd_cycle;
  TriPartition coloring;         ///< after the lexicographic coloring
  TriPartition final_partition;  ///< after recoloring (== coloring if skipped)
  Diagnostics diagnostics;

  bool has_cover() const { return cover.has_value(); }
  /// G* has no edges, i.e. G itself is threshold.
  bool threshold_graph() const { return has_cover() && diagnostics.aux_edges == 0; }
};

/// Lex-BFS, auxiliary graph, lexicographic 2-coloring, pentagon recoloring,
/// cover assembly. Yields a 2-threshold cover iff G* is bipartite; otherwise
/// an odd cycle of G*.
CoverResult two_threshold_cover(const Graph& g, const CoverOptions& options = {});

/// Shared tail of all pipelines: color with `order`, optionally recolor,
/// assemble, optionally verify.
CoverResult run_cover_pipeline(const Graph& g, const AuxiliaryGraph& aux,
                               const VertexOrdering& order, bool recolor, bool verify,
                               bool strict_verify);

}  // namespace thcover
