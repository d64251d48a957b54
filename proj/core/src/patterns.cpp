#include "thcover/patterns.hpp"

#include <array>
#include <utility>

namespace thcover {
namespace {

using PairList = std::span<const std::pair<int, int>>;

constexpr std::pair<int, int> kTwoK2[] = {{0, 1}, {2, 3}};
constexpr std::pair<int, int> kP4[] = {{0, 1}, {1, 2}, {2, 3}};
constexpr std::pair<int, int> kC4[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
constexpr std::pair<int, int> kC5[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
constexpr std::pair<int, int> kParaglider[] = {{0, 1}, {0, 4}, {1, 2}, {1, 3},
                                               {2, 3}, {2, 4}, {3, 4}};

PairList pattern_edges(Pattern p) {
  switch (p) {
    case Pattern::two_k2: return kTwoK2;
    case Pattern::p4: return kP4;
    case Pattern::c4: return kC4;
    case Pattern::c5: return kC5;
    case Pattern::paraglider: return kParaglider;
  }
  return {};
}

// want[i][j]: whether tuple positions i, j must be adjacent.
using Profile = std::array<std::array<bool, 5>, 5>;

Profile profile_of(Pattern p) {
  Profile want{};
  for (auto [i, j] : pattern_edges(p)) {
    want[i][j] = true;
    want[j][i] = true;
  }
  return want;
}

bool extend(const Graph& g, const Profile& want, int k, std::vector<Vertex>& tuple,
            std::vector<bool>& used) {
  const int depth = static_cast<int>(tuple.size());
  if (depth == k) return true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (used[v]) continue;
    bool ok = true;
    for (int i = 0; i < depth && ok; ++i) ok = g.adjacent(tuple[i], v) == want[i][depth];
    if (!ok) continue;
    tuple.push_back(v);
    used[v] = true;
    if (extend(g, want, k, tuple, used)) return true;
    used[v] = false;
    tuple.pop_back();
  }
  return false;
}

}  // namespace

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::two_k2: return "2K2";
    case Pattern::p4: return "P4";
    case Pattern::c4: return "C4";
    case Pattern::c5: return "C5";
    case Pattern::paraglider: return "paraglider";
  }
  return "?";
}

std::optional<Pattern> pattern_from_name(std::string_view name) {
  for (Pattern p : kAllPatterns) {
    if (pattern_name(p) == name) return p;
  }
  return std::nullopt;
}

int pattern_size(Pattern p) {
  return p == Pattern::c5 || p == Pattern::paraglider ? 5 : 4;
}

bool induces_pattern(const Graph& g, Pattern p, std::span<const Vertex> tuple) {
  const int k = pattern_size(p);
  if (static_cast<int>(tuple.size()) != k) return false;
  const Profile want = profile_of(p);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (tuple[i] == tuple[j]) return false;
      if (g.adjacent(tuple[i], tuple[j]) != want[i][j]) return false;
    }
  }
  return true;
}

std::optional<PatternWitness> find_induced(const Graph& g, Pattern p) {
  const int k = pattern_size(p);
  if (g.vertex_count() < k) return std::nullopt;
  std::vector<Vertex> tuple;
  tuple.reserve(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  if (!extend(g, profile_of(p), k, tuple, used)) return std::nullopt;
  return PatternWitness{p, std::move(tuple)};
}

}  // namespace thcover
