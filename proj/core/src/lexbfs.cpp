#include "thcover/lexbfs.hpp"

#include <list>

#include "thcover/error.hpp"

namespace thcover {
namespace {

// Ordered partition of the unplaced vertices into cells of equal label, best
// label first. Each cell keeps its members in ascending id order: the initial
// cell is sorted, new cells receive neighbors in ascending order, and removal
// preserves order.
class LexPartition {
 public:
  explicit LexPartition(const Graph& g)
      : g_(g),
        cell_of_(static_cast<std::size_t>(g.vertex_count())),
        slot_(static_cast<std::size_t>(g.vertex_count())),
        placed_(static_cast<std::size_t>(g.vertex_count()), false) {
    if (g.vertex_count() == 0) return;
    cells_.emplace_back();
    const auto cell = cells_.begin();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      cell->members.push_back(v);
      cell_of_[v] = cell;
      slot_[v] = std::prev(cell->members.end());
    }
  }

  bool in_best_cell(Vertex v) const { return cell_of_[v] == cells_.begin(); }
  Vertex best() const { return cells_.front().members.front(); }

  void place(Vertex v, int step) {
    placed_[v] = true;
    detach(v);
    for (Vertex w : g_.neighbors(v)) {
      if (placed_[w]) continue;
      const CellIt old = cell_of_[w];
      if (old->stamp != step) {
        old->stamp = step;
        old->split = cells_.emplace(old);
      }
      const CellIt fresh = old->split;
      detach(w);
      fresh->members.push_back(w);
      cell_of_[w] = fresh;
      slot_[w] = std::prev(fresh->members.end());
    }
  }

 private:
  struct Cell;
  using CellIt = std::list<Cell>::iterator;
  struct Cell {
    std::list<Vertex> members;
    int stamp = -1;
    CellIt split;
  };

  void detach(Vertex v) {
    const CellIt cell = cell_of_[v];
    cell->members.erase(slot_[v]);
    if (cell->members.empty()) cells_.erase(cell);
  }

  const Graph& g_;
  std::list<Cell> cells_;
  std::vector<CellIt> cell_of_;
  std::vector<std::list<Vertex>::iterator> slot_;
  std::vector<bool> placed_;
};

}  // namespace

VertexOrdering lexbfs(const Graph& g) {
  LexPartition partition(g);
  std::vector<Vertex> sequence;
  sequence.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex step = 0; step < g.vertex_count(); ++step) {
    const Vertex v = partition.best();
    sequence.push_back(v);
    partition.place(v, step);
  }
  return VertexOrdering(std::move(sequence));
}

std::optional<LexBfsViolation> verify_lexbfs(const Graph& g, const VertexOrdering& order) {
  if (order.size() != g.vertex_count()) {
    throw PreconditionError("ordering size does not match the graph");
  }
  LexPartition partition(g);
  for (Vertex step = 0; step < g.vertex_count(); ++step) {
    const Vertex v = order.at(step);
    if (!partition.in_best_cell(v)) return LexBfsViolation{step, v, partition.best()};
    partition.place(v, step);
  }
  return std::nullopt;
}

}  // namespace thcover
