#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "thcover/graph.hpp"

namespace thcover {

/// Class of an edge in a 3-partition. `free` edges (isolated in G*) may join
/// either threshold part; `one` and `two` are the two colors.
enum class EdgeClass : std::uint8_t { free = 0, one = 1, two = 2 };

constexpr EdgeClass opposite(EdgeClass c) {
  return c == EdgeClass::one ? EdgeClass::two
                             : c == EdgeClass::two ? EdgeClass::one : EdgeClass::free;
}

inline constexpr EdgeClass kColors[] = {EdgeClass::one, EdgeClass::two};

/// An assignment of every edge of a graph to one of three classes.
class TriPartition {
 public:
  TriPartition() = default;
  explicit TriPartition(EdgeId edge_count, EdgeClass initial = EdgeClass::free)
      : classes_(static_cast<std::size_t>(edge_count), initial) {}
  explicit TriPartition(std::vector<EdgeClass> classes) : classes_(std::move(classes)) {}

  EdgeId size() const { return static_cast<EdgeId>(classes_.size()); }
  EdgeClass operator[](EdgeId e) const { return classes_[static_cast<std::size_t>(e)]; }
  void assign(EdgeId e, EdgeClass c) { classes_[static_cast<std::size_t>(e)] = c; }

  /// Edge ids in class `c`, ascending.
  std::vector<EdgeId> members(EdgeClass c) const;
  std::array<std::size_t, 3> class_sizes() const;

  friend bool operator==(const TriPartition&, const TriPartition&) = default;

 private:
  std::vector<EdgeClass> classes_;
};

/// Builds a partition from per-class edge lists (anything not listed is free).
TriPartition make_partition(const Graph& g, const std::vector<EdgePair>& one,
                            const std::vector<EdgePair>& two);

/// Dense n x n lookup of the class of each vertex pair, -1 for non-edges.
/// Intended for the exhaustive detectors, which run at desk scale.
class PairClassTable {
 public:
  PairClassTable(const Graph& g, const TriPartition& tp);

  bool edge(Vertex a, Vertex b) const { return at(a, b) >= 0; }
  bool in(Vertex a, Vertex b, EdgeClass c) const { return at(a, b) == static_cast<int>(c); }
  /// Edge in class c or free.
  bool in_or_free(Vertex a, Vertex b, EdgeClass c) const {
    const int k = at(a, b);
    return k == static_cast<int>(c) || k == 0;
  }

 private:
  int at(Vertex a, Vertex b) const {
    return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }

  std::size_t n_;
  std::vector<std::int8_t> table_;
};

}  // namespace thcover
