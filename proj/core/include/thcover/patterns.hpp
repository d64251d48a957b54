#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thcover/graph.hpp"

namespace thcover {

/// Small forbidden induced subgraphs. Each pattern fixes a labeling of its
/// vertex tuple (v0, v1, ...):
///
///   two_k2      edges v0v1, v2v3
///   p4          path v0-v1-v2-v3
///   c4          cycle v0-v1-v2-v3-v0
///   c5          cycle v0-v1-v2-v3-v4-v0
///   paraglider  all pairs except v0v2, v0v3, v1v4 (complement of P3 + K2)
///
/// The paraglider labeling lines up with a pentagon (a, b, c, d, e), whose
/// non-edges are ac, ad, be.
enum class Pattern { two_k2, p4, c4, c5, paraglider };

inline constexpr Pattern kAllPatterns[] = {Pattern::two_k2, Pattern::p4, Pattern::c4,
                                           Pattern::c5, Pattern::paraglider};

std::string_view pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(std::string_view name);
int pattern_size(Pattern p);

struct PatternWitness {
  Pattern pattern;
  std::vector<Vertex> vertices;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// True iff `tuple` (distinct vertices) induces exactly `p` under its labeling.
bool induces_pattern(const Graph& g, Pattern p, std::span<const Vertex> tuple);

/// Exhaustive search; returns the lexicographically first vertex tuple that
/// induces `p`, or nothing.
std::optional<PatternWitness> find_induced(const Graph& g, Pattern p);

}  // namespace thcover
