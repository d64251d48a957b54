#pragma once

#include <array>
#include <optional>

#include "thcover/graph.hpp"
#include "thcover/partition.hpp"

namespace thcover {

// Exhaustive detectors for the configurations that the lexicographic
// coloring is proven to avoid. They scan vertex tuples in lexicographic order
// and return the first hit, so witnesses are reproducible. Intended for
// verification at desk scale (n of a few dozen at most), not for production
// use. `cls` in each witness is the class playing the role of "A".

/// (a, b, c, d, e): ac, ad, be non-edges; ab, ae in A; bc, bd, ec, ed in the
/// other color; cd in A or free. Strict when cd is in A.
struct PentagonWitness {
  std::array<Vertex, 5> vertices;
  EdgeClass cls;
  bool strict;

  friend bool operator==(const PentagonWitness&, const PentagonWitness&) = default;
};

enum class SwitchingKind { path, cycle };

/// path (x, y, z, w): xw a non-edge; xy, zw in A or free; yz in the other
/// color. Strict when xy, zw are both in A.
/// cycle (a, b, c, d): ab, cd in A or free; bc, ad in the other color.
/// Strict (by analogy) when ab, cd are both in A.
struct SwitchingWitness {
  SwitchingKind kind;
  std::array<Vertex, 4> vertices;
  EdgeClass cls;
  bool strict;

  friend bool operator==(const SwitchingWitness&, const SwitchingWitness&) = default;
};

/// Six distinct vertices with v0v1, v2v3, v4v5 in one color and v1v2, v3v4,
/// v5v0 non-edges.
struct Ap6Witness {
  std::array<Vertex, 6> vertices;
  EdgeClass cls;

  friend bool operator==(const Ap6Witness&, const Ap6Witness&) = default;
};

std::optional<PentagonWitness> detect_pentagon(const Graph& g, const TriPartition& tp,
                                               bool strict_only);

/// Does not require `tp` to be valid.
std::optional<SwitchingWitness> detect_switching(const Graph& g, const TriPartition& tp,
                                                 SwitchingKind kind, bool strict_only);

/// Requires every edge to be colored one or two (PreconditionError otherwise).
std::optional<Ap6Witness> detect_ap6(const Graph& g, const TriPartition& coloring);

}  // namespace thcover
