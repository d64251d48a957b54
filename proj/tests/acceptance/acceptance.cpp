// One line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "cli.hpp"
#include "support.hpp"
#include "thcover/auxiliary.hpp"
#include "thcover/cover.hpp"
#include "thcover/io.hpp"
#include "thcover/oracle.hpp"
#include "thcover/recognition.hpp"
#include "thcover/reductions.hpp"
#include "thcover/structures.hpp"

namespace thcover {
namespace {

using namespace testing;
using Clock = std::chrono::steady_clock;

constexpr double kAuxFixtureSeconds = 1.0;
constexpr double kExhaustiveSweepSeconds = 300.0;
constexpr std::size_t kRandomDetectorInstances = 1000;
constexpr Vertex kRandomMaxN = 9;
constexpr std::size_t kFoldingInstances = 200;
constexpr double kDoublingRatio = 5.0;
constexpr int kTimingRepeats = 5;
constexpr std::size_t kSplitInstances = 1000;
constexpr std::size_t kChainInstances = 500;
constexpr EdgeId kChainBruteMaxEdges = 12;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Verdict ac1_aux_fixture() {
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"aux", data_path("example7.txt")}, out, err);
  const double elapsed = seconds_since(t0);
  const std::string expected =
      "13 11\n# isolated: 4-5\n"
      "1-4 2-3\n1-4 3-6\n1-5 2-7\n1-5 6-7\n2-3 4-6\n2-3 6-7\n"
      "2-4 3-6\n2-5 6-7\n2-7 3-6\n2-7 5-6\n3-5 4-7\n";
  Verdict v;
  v.pass = code == 0 && out.str() == expected && elapsed < kAuxFixtureSeconds;
  v.detail = "13 vertices, 11 edges, 4-5 isolated; " + std::to_string(elapsed) + " s";
  if (out.str() != expected) v.detail = "output mismatch:\n" + out.str();
  return v;
}

bool classes_match(const Graph& g, const TriPartition& tp, std::string_view one,
                   std::string_view two, std::string_view free) {
  return names(g, tp.members(EdgeClass::one)) == one &&
         names(g, tp.members(EdgeClass::two)) == two &&
         names(g, tp.members(EdgeClass::free)) == free;
}

Verdict ac2_lexbfs_coloring() {
  const Graph g = example7();
  CoverOptions opt;
  opt.ordering = ordering({1, 4, 5, 6, 2, 7, 3});
  const CoverResult r = two_threshold_cover(g, opt);
  Verdict v;
  v.pass = r.has_cover() &&
           classes_match(g, r.final_partition, "14 24 27 46 47 67", "15 23 25 35 36 56", "45") &&
           is_threshold(g.edge_subgraph(r.cover->first)).threshold &&
           is_threshold(g.edge_subgraph(r.cover->second)).threshold;
  v.detail = "F1 = {" + names(g, r.final_partition.members(EdgeClass::one)) + "}, F2 = {" +
             names(g, r.final_partition.members(EdgeClass::two)) + "}, F0 = {" +
             names(g, r.final_partition.members(EdgeClass::free)) + "}";
  return v;
}

Verdict ac3_identity_coloring() {
  const Graph g = example7();
  CoverOptions opt;
  opt.ordering = VertexOrdering::identity(7);
  opt.skip_phase1 = true;
  const CoverResult r = two_threshold_cover(g, opt);
  Verdict v;
  if (!r.has_cover()) return {false, "no cover produced"};
  const bool exact =
      classes_match(g, r.final_partition, "14 24 27 35 46 67", "15 23 25 36 47 56", "45");
  const bool verified = verify_cover(g, r.cover->first, r.cover->second);
  const auto c4_first = find_induced(g.edge_subgraph(r.cover->first), Pattern::c4);
  const auto c4_second = find_induced(g.edge_subgraph(r.cover->second), Pattern::c4);
  v.pass = exact && !verified && c4_first && c4_second;
  auto show = [](const std::optional<PatternWitness>& w) {
    if (!w) return std::string("none");
    std::string s;
    for (Vertex x : w->vertices) s += std::to_string(x + 1);
    return s;
  };
  v.detail = std::string("partition ") + (exact ? "exact" : "MISMATCH") +
             ", verify_cover = " + (verified ? "true" : "false") + ", C4 in H1 " +
             show(c4_first) + ", C4 in H2 " + show(c4_second);
  return v;
}

std::string first_message(const SweepReport& r) {
  return r.failure_messages.empty() ? "" : "\n" + r.failure_messages.front();
}

// The exhaustive sweep checks the oracle equivalence and, on YES instances,
// the cover and the structure detectors; AC4 and AC5 share it.
SweepReport g_exhaustive;
double g_exhaustive_seconds = 0;

Verdict ac4_exhaustive() {
  const auto t0 = Clock::now();
  g_exhaustive = equivalence_sweep({6, GenMode::exhaustive});
  g_exhaustive_seconds = seconds_since(t0);
  Verdict v;
  v.pass = g_exhaustive.ok() && g_exhaustive.instances == 32768 &&
           g_exhaustive.brute_checked == 32768 && g_exhaustive_seconds < kExhaustiveSweepSeconds;
  v.detail = std::to_string(g_exhaustive.instances) + " graphs (" +
             std::to_string(g_exhaustive.yes) + " yes, " + std::to_string(g_exhaustive.no) +
             " no), " + std::to_string(g_exhaustive.failures) + " failures, " +
             std::to_string(g_exhaustive_seconds) + " s" + first_message(g_exhaustive);
  return v;
}

// Random graphs with n <= 9 kept only when G* is bipartite.
std::vector<Graph> random_bipartite_aux(std::size_t count, Vertex min_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> size(min_n, kRandomMaxN);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::vector<Graph> out;
  while (out.size() < count) {
    Graph g = gnp(size(rng), density(rng), rng);
    if (build_auxiliary(g).bipartite()) out.push_back(std::move(g));
  }
  return out;
}

Verdict ac5_detectors() {
  std::size_t failures = 0;
  std::string message;
  const auto graphs = random_bipartite_aux(kRandomDetectorInstances, 4, 0x5eed0005);
  for (const Graph& g : graphs) {
    const auto problems = check_instance(g, true);
    if (!problems.empty()) {
      ++failures;
      if (message.empty()) message = "\n" + problems.front();
    }
  }
  Verdict v;
  v.pass = g_exhaustive.ok() && g_exhaustive.yes > 0 && failures == 0;
  v.detail = "exhaustive n=6: " + std::to_string(g_exhaustive.yes) + " YES instances, " +
             std::to_string(g_exhaustive.failures) + " witnesses; random n<=9: " +
             std::to_string(graphs.size()) + " instances, " + std::to_string(failures) +
             " witnesses" + message;
  return v;
}

Verdict ac6_ap6() {
  const auto graphs = random_bipartite_aux(kFoldingInstances, 6, 0x5eed0006);
  std::mt19937_64 rng(0x5eed0606);
  std::bernoulli_distribution coin(0.5);
  std::size_t witnesses = 0, folded_edges = 0;
  for (const Graph& g : graphs) {
    const CoverResult r = two_threshold_cover(g);
    TriPartition folded = r.coloring;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (folded[e] != EdgeClass::free) continue;
      folded.assign(e, coin(rng) ? EdgeClass::one : EdgeClass::two);
      ++folded_edges;
    }
    if (detect_ap6(g, folded)) ++witnesses;
  }
  return {witnesses == 0, std::to_string(graphs.size()) + " instances, " +
                              std::to_string(folded_edges) + " free edges folded, " +
                              std::to_string(witnesses) + " AP6 witnesses"};
}

// Union of two random threshold graphs with m within 2% of `target`.
Graph union_with_edges(EdgeId target, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (Vertex n = 8;; ++n) {
    for (int attempt = 0; attempt < 50; ++attempt) {
      const Graph a = random_threshold_graph(n, 0.5, rng);
      const Graph b = random_threshold_graph(n, 0.5, rng);
      std::vector<EdgePair> e(a.edges().begin(), a.edges().end());
      e.insert(e.end(), b.edges().begin(), b.edges().end());
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      const auto m = static_cast<double>(e.size());
      if (std::abs(m - target) <= 0.02 * target) return Graph(n, e);
    }
  }
}

Verdict ac7_scaling() {
  const EdgeId sizes[] = {500, 1000, 2000};
  double times[3];
  EdgeId edges[3];
  for (int i = 0; i < 3; ++i) {
    const Graph g = union_with_edges(sizes[i], 0x5eed0007 + static_cast<std::uint64_t>(i));
    edges[i] = g.edge_count();
    double best = 1e9;
    for (int rep = 0; rep < kTimingRepeats; ++rep) {
      const auto t0 = Clock::now();
      const CoverResult r = two_threshold_cover(g);
      best = std::min(best, seconds_since(t0));
      if (!r.has_cover()) return {false, "union of two threshold graphs rejected"};
    }
    times[i] = best;
  }
  double worst = 0;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    detail += "m=" + std::to_string(edges[i]) + ": " + std::to_string(times[i] * 1e3) + " ms; ";
  }
  for (int i = 1; i < 3; ++i) {
    worst = std::max(worst, times[i] / times[i - 1]);
  }
  detail += "worst doubling ratio " + std::to_string(worst) + " (limit " +
            std::to_string(kDoublingRatio) + ")";
  return {worst <= kDoublingRatio, detail};
}

Verdict ac8_split() {
  GraphGenerator gen({12, GenMode::random_split, 0.5, 0x5eed0008, kSplitInstances, 3});
  std::size_t yes = 0, mismatches = 0, unverified = 0;
  while (auto g = gen.next()) {
    const CoverResult fast = split_cover(*g);
    const CoverResult full = two_threshold_cover(*g);
    if (fast.has_cover() != full.has_cover()) ++mismatches;
    if (fast.has_cover()) {
      ++yes;
      if (!verify_cover(*g, fast.cover->first, fast.cover->second)) ++unverified;
    }
  }
  bool rejected = false;
  std::string witness;
  try {
    paraglider_free_cover(paraglider());
  } catch (const ParagliderFound& e) {
    rejected = induces_pattern(paraglider(), Pattern::paraglider, e.witness().vertices);
    for (Vertex x : e.witness().vertices) witness += std::to_string(x + 1);
  }
  return {mismatches == 0 && unverified == 0 && rejected,
          std::to_string(kSplitInstances) + " split graphs (" + std::to_string(yes) +
              " yes), " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(unverified) + " unverified; paraglider rejected with witness " +
              (rejected ? witness : "NONE")};
}

bool chain_cover_ok(const Graph& g, const ChainCover& c) {
  std::vector<bool> covered(g.edge_count(), false);
  for (EdgeId e : c.first) covered[e] = true;
  for (EdgeId e : c.second) covered[e] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }) &&
         is_chain(g.edge_subgraph(c.first), c.parts).chain &&
         is_chain(g.edge_subgraph(c.second), c.parts).chain;
}

Verdict ac9_chain() {
  GraphGenerator gen({14, GenMode::union_of_two_chain, 0.5, 0x5eed0009, kChainInstances, 4});
  std::size_t bad = 0;
  while (auto g = gen.next()) {
    const auto r = two_chain_cover(*g);
    const auto* c = std::get_if<ChainCover>(&r);
    if (!c || !chain_cover_ok(*g, *c)) ++bad;
  }

  // Every bipartite graph on up to 6 labeled vertices, and every edge subset
  // of K(3,4) and K(4,4) with at most 12 edges.
  std::size_t compared = 0, disagreements = 0;
  auto compare = [&](const Graph& g) {
    if (g.edge_count() > kChainBruteMaxEdges) return;
    ++compared;
    const auto r = two_chain_cover(g);
    const auto* c = std::get_if<ChainCover>(&r);
    if (c != nullptr ? !chain_cover_ok(g, *c) : false) ++disagreements;
    if ((c != nullptr) != brute_force_two_chain(g).yes) ++disagreements;
  };
  for (Vertex n = 2; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = from_mask(n, mask);
      if (find_bipartition(g)) compare(g);
    }
  for (Vertex left : {3, 4}) {
    std::vector<EdgePair> all;
    for (Vertex a = 0; a < left; ++a)
      for (Vertex b = left; b < left + 4; ++b) all.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      if (std::popcount(mask) > kChainBruteMaxEdges) continue;
      std::vector<EdgePair> e;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) e.push_back(all[i]);
      compare(Graph(left + 4, e));
    }
  }
  return {bad == 0 && disagreements == 0,
          std::to_string(kChainInstances) + " union-of-two-chain instances, " +
              std::to_string(bad) + " bad covers; " + std::to_string(compared) +
              " exhaustive instances (m <= 12), " + std::to_string(disagreements) +
              " disagreements with brute force"};
}

Verdict ac10_paraglider() {
  const Graph g = paraglider();
  const CoverResult full = two_threshold_cover(g);
  CoverOptions opt;
  opt.skip_phase3 = true;
  const CoverResult truncated = two_threshold_cover(g, opt);
  if (!full.has_cover() || !truncated.has_cover()) return {false, "no cover produced"};
  const bool full_ok = verify_cover(g, full.cover->first, full.cover->second);
  const bool first_ok = is_threshold(g.edge_subgraph(truncated.cover->first)).threshold;
  const bool second_ok = is_threshold(g.edge_subgraph(truncated.cover->second)).threshold;
  return {full_ok && !(first_ok && second_ok),
          std::string("default: ") + (full_ok ? "verified" : "NOT verified") +
              " (recolored " + names(g, full.diagnostics.recolor.to_two) +
              "); without recoloring: H1 {" + names(g, truncated.cover->first) + "} " +
              (first_ok ? "threshold" : "not threshold") + ", H2 {" +
              names(g, truncated.cover->second) + "} " +
              (second_ok ? "threshold" : "not threshold")};
}

}  // namespace
}  // namespace thcover

int main() {
  using namespace thcover;
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"AC1 aux fixture", ac1_aux_fixture},
      {"AC2 lexbfs-ordered coloring", ac2_lexbfs_coloring},
      {"AC3 identity-ordered failure", ac3_identity_coloring},
      {"AC4 oracle equivalence n=6", ac4_exhaustive},
      {"AC5 structure detectors", ac5_detectors},
      {"AC6 AP6 after folding", ac6_ap6},
      {"AC7 quadratic scaling", ac7_scaling},
      {"AC8 split and paraglider variants", ac8_split},
      {"AC9 chain cover", ac9_chain},
      {"AC10 recoloring necessity", ac10_paraglider},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
    failed += !v.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
