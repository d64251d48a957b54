#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>

#include "thcover/auxiliary.hpp"
#include "thcover/cover.hpp"
#include "thcover/error.hpp"
#include "thcover/io.hpp"
#include "thcover/lexbfs.hpp"
#include "thcover/oracle.hpp"
#include "thcover/patterns.hpp"
#include "thcover/recognition.hpp"
#include "thcover/reductions.hpp"

namespace thcover::cli {
namespace {

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string ordering;  // empty: none
  bool skip_phase1 = false;
  bool skip_phase3 = false;
  bool verify = false;
  bool diagnostics = false;
  std::string side;  // chain-cover: "A", "B" or empty
  int nmax = 6;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

std::string vertices(std::span<const Vertex> vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v + 1);
  }
  return s;
}

std::string describe(const AlternatingFourCycle& q) {
  return "alternating 4-cycle " + vertices(std::vector<Vertex>{q.a, q.b, q.c, q.d}) +
         " (edges " + format_edge({q.a, q.b}) + " " + format_edge({q.c, q.d}) +
         ", non-edges " + format_edge({q.b, q.c}) + " " + format_edge({q.a, q.d}) + ")";
}

void print_part_check(std::ostream& out, const Graph& g, const char* name,
                      std::span<const EdgeId> part, const PartReport& report) {
  out << name << "-CHECK: ";
  if (report.threshold) {
    out << "threshold\n";
    return;
  }
  out << "not threshold; " << describe(*report.certificate.violation);
  if (auto c4 = find_induced(g.edge_subgraph(part), Pattern::c4)) {
    out << "; induced C4 " << vertices(c4->vertices);
  }
  out << '\n';
}

int do_cover(const RunConfig& cfg, std::ostream& out) {
  const Graph g = read_graph_file(cfg.input);
  CoverOptions options;
  options.skip_phase1 = cfg.skip_phase1;
  options.skip_phase3 = cfg.skip_phase3;
  options.verify = cfg.verify;
  if (!cfg.ordering.empty()) {
    options.ordering = read_ordering_file(cfg.ordering, g.vertex_count());
    options.skip_phase1 = true;
  }
  const CoverResult result = two_threshold_cover(g, options);

  if (cfg.diagnostics) {
    for (const std::string& line : result.diagnostics.log(g)) out << "# " << line << '\n';
  }
  if (!result.has_cover()) {
    out << "NO\nODD-CYCLE: " << format_edges(g, result.odd_cycle->cycle) << '\n';
    return kOk;
  }
  out << "YES\n";
  out << "THRESHOLD-DIMENSION: " << (result.threshold_graph() ? 1 : 2) << '\n';
  out << "H1: " << format_edges(g, result.cover->first) << '\n';
  out << "H2: " << format_edges(g, result.cover->second) << '\n';
  if (const auto& v = result.diagnostics.verification) {
    out << "VERIFY: " << (v->ok() ? "PASS" : "FAIL") << '\n';
    if (!v->covers) out << "COVER-CHECK: parts do not cover every edge\n";
    print_part_check(out, g, "H1", result.cover->first, v->first);
    print_part_check(out, g, "H2", result.cover->second, v->second);
  }
  return kOk;
}

int do_aux(const RunConfig& cfg, std::ostream& out) {
  const Graph g = read_graph_file(cfg.input);
  const AuxiliaryGraph aux = build_auxiliary(g);
  out << aux.vertex_count() << ' ' << aux.edge_count() << '\n';
  std::vector<EdgeId> isolated;
  for (EdgeId e = 0; e < aux.vertex_count(); ++e) {
    if (aux.isolated(e)) isolated.push_back(e);
  }
  out << "# isolated: " << format_edges(g, isolated) << '\n';
  for (const auto& [e, f] : aux.edge_list()) {
    out << format_edge(g.edge(e)) << ' ' << format_edge(g.edge(f)) << '\n';
  }
  return kOk;
}

int do_lexbfs(const RunConfig& cfg, std::ostream& out) {
  const Graph g = read_graph_file(cfg.input);
  out << format_ordering(lexbfs(g)) << '\n';
  return kOk;
}

int do_check(const RunConfig& cfg, std::ostream& out) {
  const Graph g = read_graph_file(cfg.input);

  const ThresholdResult th = is_threshold(g);
  out << "threshold: ";
  if (th.threshold) {
    out << "yes (elimination " << vertices(th.certificate.elimination) << ")\n";
  } else {
    out << "no (" << describe(*th.certificate.violation) << ")\n";
  }

  out << "split: ";
  if (auto split = split_partition(g)) {
    out << "yes (clique: " << vertices(split->clique)
        << "; independent: " << vertices(split->independent) << ")\n";
  } else {
    out << "no\n";
  }

  const ParagliderResult pg = is_paraglider_free(g);
  out << "paraglider-free: "
      << (pg.paraglider_free ? std::string("yes")
                             : "no (paraglider " + vertices(pg.witness->vertices) + ")")
      << '\n';

  out << "bipartite: ";
  if (auto parts = find_bipartition(g)) {
    out << "yes (A: " << vertices(parts->left) << "; B: " << vertices(parts->right) << ")";
    out << "; chain: " << (is_chain(g, *parts).chain ? "yes" : "no");
    out << '\n';
  } else {
    out << "no\n";
  }

  out << "aux-bipartite: " << (build_auxiliary(g).bipartite() ? "yes" : "no") << '\n';

  if (!cfg.ordering.empty()) {
    const VertexOrdering order = read_ordering_file(cfg.ordering, g.vertex_count());
    out << "lexbfs-ordering: ";
    if (auto bad = verify_lexbfs(g, order)) {
      out << "no (position " << bad->position + 1 << ": vertex " << bad->chosen + 1
          << " placed while " << bad->better + 1 << " has a better label)\n";
    } else {
      out << "yes\n";
    }
  }
  return kOk;
}

int do_chain_cover(const RunConfig& cfg, std::ostream& out) {
  const Graph g = read_graph_file(cfg.input);
  std::optional<CliqueSide> side;
  if (cfg.side == "A") side = CliqueSide::left;
  if (cfg.side == "B") side = CliqueSide::right;
  const ChainCoverResult result = two_chain_cover(g, side);
  if (const auto* cert = std::get_if<OddCycleCertificate>(&result)) {
    out << "NO\nODD-CYCLE: " << format_edges(g, cert->cycle) << '\n';
    return kOk;
  }
  const auto& cover = std::get<ChainCover>(result);
  out << "YES\n";
  out << "C1: " << format_edges(g, cover.first) << '\n';
  out << "C2: " << format_edges(g, cover.second) << '\n';
  return kOk;
}

int do_oracle(const RunConfig& cfg, std::ostream& out) {
  const Graph g = read_graph_file(cfg.input);
  const BruteForceResult result = brute_force_two_threshold(g);
  if (!result.yes) {
    out << "NO\n";
    return kOk;
  }
  out << "YES\n";
  out << "H1: " << format_edges(g, result.cover->first) << '\n';
  out << "H2: " << format_edges(g, result.cover->second) << '\n';
  return kOk;
}

int do_selftest(const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  auto report = [&](const std::string& label, const SweepReport& r) {
    out << label << ": " << r.instances << " instances, " << r.yes << " yes, " << r.no
        << " no, " << r.brute_checked << " brute-checked, " << r.failures << " failures\n";
    for (const auto& msg : r.failure_messages) out << "  " << msg;
    ok = ok && r.ok();
  };

  for (Vertex n = 1; n <= cfg.nmax; ++n) {
    report("exhaustive n=" + std::to_string(n), equivalence_sweep({n, GenMode::exhaustive}));
  }
  GenSpec random{9, GenMode::union_of_two_threshold, 0.5, cfg.seed, cfg.samples, 4};
  report("union-of-two-threshold n<=9", equivalence_sweep(random));
  random.mode = GenMode::random_gnp;
  report("random-gnp n<=9", equivalence_sweep(random));

  // Split and chain fast paths against the general pipeline.
  std::size_t split_failures = 0;
  GraphGenerator splits({9, GenMode::random_split, 0.5, cfg.seed, cfg.samples, 4});
  while (auto g = splits.next()) {
    const CoverResult fast = split_cover(*g);
    const CoverResult full = two_threshold_cover(*g);
    if (fast.has_cover() != full.has_cover()) ++split_failures;
  }
  out << "random-split n<=9: " << cfg.samples << " instances, " << split_failures
      << " failures\n";
  ok = ok && split_failures == 0;

  std::size_t chain_failures = 0;
  GraphGenerator chains({10, GenMode::union_of_two_chain, 0.5, cfg.seed, cfg.samples, 2});
  while (auto g = chains.next()) {
    const ChainCoverResult r = two_chain_cover(*g);
    const auto* cover = std::get_if<ChainCover>(&r);
    if (!cover || !is_chain(g->edge_subgraph(cover->first), cover->parts).chain ||
        !is_chain(g->edge_subgraph(cover->second), cover->parts).chain) {
      ++chain_failures;
    }
  }
  out << "union-of-two-chain n<=10: " << cfg.samples << " instances, " << chain_failures
      << " failures\n";
  ok = ok && chain_failures == 0;

  out << "selftest: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold covers of size two: recognition, construction and certificates", "thcover"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* cover = app.add_subcommand("cover", "2-threshold cover or an odd cycle of G*");
  cover->add_option("FILE", cfg.input, "edge-list file")->required();
  cover->add_option("--ordering", cfg.ordering, "vertex ordering file (implies --skip-phase1)");
  cover->add_flag("--skip-phase1", cfg.skip_phase1, "use the identity ordering instead of Lex-BFS");
  cover->add_flag("--skip-phase3", cfg.skip_phase3, "skip pentagon recoloring");
  cover->add_flag("--verify", cfg.verify, "check both parts for thresholdness");
  cover->add_flag("--diagnostics", cfg.diagnostics, "print per-phase diagnostics as # lines");

  auto* aux = app.add_subcommand("aux", "print the auxiliary graph G*");
  aux->add_option("FILE", cfg.input, "edge-list file")->required();

  auto* lex = app.add_subcommand("lexbfs", "print the Lex-BFS ordering");
  lex->add_option("FILE", cfg.input, "edge-list file")->required();

  auto* check = app.add_subcommand("check", "recognize threshold/split/paraglider-free/chain");
  check->add_option("FILE", cfg.input, "edge-list file")->required();
  check->add_option("--ordering", cfg.ordering, "also test whether this ordering is a Lex-BFS ordering");

  auto* chain = app.add_subcommand("chain-cover", "2-chain subgraph cover of a bipartite graph");
  chain->add_option("FILE", cfg.input, "edge-list file")->required();
  chain->add_option("--side", cfg.side, "side completed to a clique")
      ->check(CLI::IsMember({"A", "B"}));

  auto* oracle = app.add_subcommand("oracle", "brute-force 2-threshold cover search (<= 20 edges)");
  oracle->add_option("FILE", cfg.input, "edge-list file")->required();

  auto* selftest = app.add_subcommand("selftest", "oracle equivalence sweeps");
  selftest->add_option("--nmax", cfg.nmax, "largest exhaustive vertex count")
      ->check(CLI::Range(1, 7));
  selftest->add_option("--samples", cfg.samples, "random instances per sweep");
  selftest->add_option("--seed", cfg.seed, "64-bit generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*cover) return do_cover(cfg, out);
    if (*aux) return do_aux(cfg, out);
    if (*lex) return do_lexbfs(cfg, out);
    if (*check) return do_check(cfg, out);
    if (*chain) return do_chain_cover(cfg, out);
    if (*oracle) return do_oracle(cfg, out);
    if (*selftest) return do_selftest(cfg, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

}  // namespace thcover::cli
