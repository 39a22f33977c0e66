#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "critgraph/alpha.hpp"
#include "critgraph/bench.hpp"
#include "critgraph/circulant.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/dimacs.hpp"
#include "critgraph/errors.hpp"
#include "critgraph/generator.hpp"
#include "critgraph/parallel.hpp"
#include "critgraph/solver.hpp"

using namespace critgraph;

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInfeasible = 2, kBudget = 3 };

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("expected a range like 4..60, got '" + text + "'");
  }
}

struct BudgetFlags {
  std::uint64_t max_nodes = SolveBudget{}.max_nodes;
  std::int64_t time_limit_ms = SolveBudget{}.max_time.count();

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "Branch-and-bound node budget per solve")->capture_default_str();
    cmd->add_option("--time-limit-ms", time_limit_ms, "Wall-clock budget per solve")->capture_default_str();
  }
  SolveBudget budget() const { return {max_nodes, std::chrono::milliseconds{time_limit_ms}}; }
};

std::string numbered(const std::string& prefix, std::size_t index, std::size_t count) {
  if (count == 1) return prefix;
  std::ostringstream out;
  out << prefix << '_' << std::setw(4) << std::setfill('0') << index + 1;
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::string cover_line(const std::string& id, const VertexSet& cover) {
  std::string line = id + " " + std::to_string(cover.size());
  for (Vertex v : cover) line += " " + std::to_string(v + 1);
  return line + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical-graph toolkit: exact vertex cover, criticality checks, hidden-optimum instance generation"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // gen
  GeneratorConfig gen_cfg;
  std::size_t gen_m = 0, gen_ell = 0, gen_count = 1, gen_workers = default_workers();
  double gen_k = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate hidden-optimum instances");
  gen->add_option("--n", gen_cfg.n, "Vertices")->required();
  auto* gen_m_opt = gen->add_option("--m", gen_m, "Edges");
  auto* gen_k_opt = gen->add_option("--k", gen_k, "Edge exponent, m = round(n^k)");
  gen_m_opt->excludes(gen_k_opt);
  auto* gen_ell_opt = gen->add_option("--ell", gen_ell, "Hidden cover size (default ceil(n/2) + ceil(n/100))");
  gen->add_option("--seed", gen_cfg.seed, "Seed (bundle i of a batch uses seed + i)")->capture_default_str();
  gen->add_option("--bases", gen_cfg.bases, "Sampled base graphs")->capture_default_str();
  gen->add_option("--stop-probability", gen_cfg.stop_probability, "Random stop chance near the target")
      ->capture_default_str();
  gen->add_option("--count", gen_count, "Number of bundles")->capture_default_str();
  gen->add_option("--workers", gen_workers, "Worker threads (default CRITGRAPH_WORKERS or 1)");
  gen->add_option("--out", gen_out, "Output prefix; writes PREFIX.dimacs and PREFIX.json")->required();
  gen->callback([&] {
    if (!*gen_m_opt && !*gen_k_opt) throw InvalidArgument("gen needs --m or --k");
    if (*gen_m_opt) gen_cfg.m = gen_m;
    if (*gen_k_opt) gen_cfg.k = gen_k;
    if (*gen_ell_opt) gen_cfg.ell = gen_ell;
    const auto bundles = parallel_map(gen_count, gen_workers, [&](std::size_t i) {
      auto cfg = gen_cfg;
      cfg.seed += i;
      return generate_hard(cfg);
    });
    for (std::size_t i = 0; i < gen_count; ++i) {
      const auto prefix = numbered(gen_out, i, gen_count);
      write_bundle(prefix, bundles[i]);
      std::cout << prefix << ": n=" << bundles[i].n << " m=" << bundles[i].m << " ell=" << bundles[i].ell << "\n";
    }
  });

  // gen-baseline
  auto* base = app.add_subcommand("gen-baseline", "Generate comparison instances");
  base->require_subcommand(1);
  std::size_t sl_n = 0, sl_m = 0, sl_nc = 0;
  double sl_k = 0;
  std::uint64_t sl_seed = 0;
  std::string sl_out;
  auto* sl = base->add_subcommand("structureless", "Edges drawn from the pairs touching a set V_C");
  sl->add_option("--n", sl_n, "Vertices")->required();
  auto* sl_m_opt = sl->add_option("--m", sl_m, "Edges");
  auto* sl_k_opt = sl->add_option("--k", sl_k, "Edge exponent, m = round(n^k)");
  sl_m_opt->excludes(sl_k_opt);
  sl->add_option("--nc", sl_nc, "Size of V_C (an upper bound on the cover)")->required();
  sl->add_option("--seed", sl_seed)->capture_default_str();
  sl->add_option("--out", sl_out, "Output prefix")->required();
  sl->callback([&] {
    if (!*sl_m_opt && !*sl_k_opt) throw InvalidArgument("structureless needs --m or --k");
    GeneratorConfig c;
    c.n = sl_n;
    if (*sl_m_opt) c.m = sl_m;
    else c.k = sl_k;
    auto b = generate_structureless(sl_n, resolve_edges(c), sl_nc, sl_seed);
    if (*sl_k_opt) b.k = sl_k;
    write_bundle(sl_out, b);
    std::cout << sl_out << ": n=" << b.n << " m=" << b.m << " n_c=" << sl_nc << "\n";
  });

  std::size_t wz_cliques = 0, wz_size = 0, wz_m = 0;
  std::uint64_t wz_seed = 0;
  std::string wz_out;
  auto* wz = base->add_subcommand("witzel", "Disjoint cliques joined by random edges");
  wz->add_option("--cliques", wz_cliques, "Number of cliques")->required();
  wz->add_option("--size", wz_size, "Vertices per clique")->required();
  wz->add_option("--m", wz_m, "Total edges")->required();
  wz->add_option("--seed", wz_seed)->capture_default_str();
  wz->add_option("--out", wz_out, "Output prefix")->required();
  wz->callback([&] {
    const auto b = generate_witzel(wz_cliques, wz_size, wz_m, wz_seed);
    write_bundle(wz_out, b);
    std::cout << wz_out << ": n=" << b.n << " m=" << b.m << " lower_bound=" << b.bound << "\n";
  });

  // solve
  std::string solve_in, solve_algo = "exact", solve_out;
  BudgetFlags solve_budget;
  auto* solve = app.add_subcommand("solve", "Minimum (exact) or greedy vertex cover of a DIMACS graph");
  solve->add_option("--in", solve_in, "DIMACS file")->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", solve_algo, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  solve->add_option("--out", solve_out, "Write the cover as an import line 'id size v1 ... vk'");
  solve_budget.attach(solve);
  solve->callback([&] {
    const auto g = dimacs::read_file(solve_in);
    VertexSet cover;
    std::string status = "exact";
    std::uint64_t steps = 0;
    if (solve_algo == "greedy") {
      auto r = greedy_solve(g);
      cover = std::move(r.cover);
      steps = r.steps;
      status = "heuristic";
    } else {
      auto r = mvc(g, solve_budget.budget());
      cover = std::move(r.cover);
      steps = r.stats.nodes;
      status = std::string(to_string(r.status));
      if (!r.exact()) exit_code = kBudget;
    }
    std::cout << "size " << cover.size() << "\nstatus " << status << "\nsteps " << steps << "\ncover";
    for (Vertex v : cover) std::cout << ' ' << v + 1;
    std::cout << "\n";
    if (!solve_out.empty()) write_text(solve_out, cover_line(std::filesystem::path(solve_in).stem().string(), cover));
  });

  // check-critical
  std::string cc_in;
  std::size_t cc_workers = default_workers();
  BudgetFlags cc_budget;
  auto* cc = app.add_subcommand("check-critical", "Decide whether every edge deletion lowers the cover size");
  cc->add_option("--in", cc_in, "DIMACS file")->required()->check(CLI::ExistingFile);
  cc->add_option("--workers", cc_workers, "Worker threads (default CRITGRAPH_WORKERS or 1)");
  cc_budget.attach(cc);
  cc->callback([&] {
    const auto g = dimacs::read_file(cc_in);
    const auto v = is_critical(g, cc_budget.budget(), cc_workers);
    std::cout << "verdict " << to_string(v.status) << "\ncover_size " << v.base_cover_size << "\n";
    if (v.witness_edge) std::cout << "witness_edge " << v.witness_edge->u + 1 << ' ' << v.witness_edge->v + 1 << "\n";
    std::cout << "nodes " << v.nodes << "\n";
    if (v.status == Criticality::unknown) exit_code = kBudget;
  });

  // circulant-search
  SearchOptions cs;
  std::string cs_n = "4..60", cs_offsets = "2..20", cs_out;
  bool cs_critical_only = false;
  cs.workers = default_workers();
  BudgetFlags cs_budget;
  cs_budget.max_nodes = cs.budget.max_nodes;
  cs_budget.time_limit_ms = cs.budget.max_time.count();
  auto* csc = app.add_subcommand("circulant-search", "Classify circulant graphs CG(n, {1, ...}) by criticality");
  csc->add_option("--degree", cs.degree, "4 for {1, j}, 6 for {1, i, j}")
      ->check(CLI::IsMember({4, 6}))
      ->capture_default_str();
  csc->add_option("--n", cs_n, "Range of n, e.g. 4..60")->capture_default_str();
  csc->add_option("--offsets", cs_offsets, "Range of the extra offsets")->capture_default_str();
  csc->add_option("--workers", cs.workers, "Worker threads (default CRITGRAPH_WORKERS or 1)");
  csc->add_flag("--critical-only", cs_critical_only, "Write only critical rows");
  csc->add_option("--out", cs_out, "CSV file (stdout when omitted)");
  cs_budget.attach(csc);
  csc->callback([&] {
    const auto n = parse_range(cs_n), off = parse_range(cs_offsets);
    cs.n_min = n.lo;
    cs.n_max = n.hi;
    cs.offset_min = off.lo;
    cs.offset_max = off.hi;
    cs.budget = cs_budget.budget();
    auto rows = search_critical(cs);
    std::size_t critical = 0, unknown = 0;
    for (const auto& r : rows) {
      critical += r.verdict == Criticality::critical;
      unknown += r.verdict == Criticality::unknown;
    }
    if (cs_critical_only) rows = critical_rows(rows);
    if (cs_out.empty()) {
      write_catalog_csv(std::cout, rows);
    } else {
      write_text(cs_out, catalog_csv(rows));
      std::cout << "critical " << critical << "\nunknown " << unknown << "\n";
    }
    if (unknown) exit_code = kBudget;
  });

  // alpha
  std::size_t al_n = 0, al_c = 0;
  auto* al = app.add_subcommand("alpha", "Lexicographically minimal clique split and edge bounds");
  al->add_option("--n", al_n, "Vertices")->required();
  al->add_option("--c", al_c, "Cover size")->required();
  al->callback([&] {
    if (al_n <= al_c) throw InfeasibleError("need n > c");
    const auto a = lexmin_alpha(al_n, al_c);
    std::cout << "alpha " << a.to_string() << "\nedge_lower_bound " << alpha_edge_lower_bound(a) << "\nmax_edges "
              << max_edges(al_n, al_c) << "\n";
  });

  // verify
  std::vector<std::string> vf_in;
  std::size_t vf_limit = 2000;
  BudgetFlags vf_budget;
  auto* vf = app.add_subcommand("verify", "Check bundles against their hidden covers");
  vf->add_option("--in", vf_in, "Bundle prefixes")->required();
  vf->add_option("--exact-limit", vf_limit, "Largest n for the minimality check")->capture_default_str();
  vf_budget.attach(vf);
  vf->callback([&] {
    bool failed = false, undecided = false;
    for (const auto& prefix : vf_in) {
      const auto rep = verify_bundle(read_bundle(prefix), vf_budget.budget(), vf_limit);
      std::cout << prefix << ": " << (rep.ok ? "pass" : "fail") << " minimality=" << to_string(rep.minimality) << "\n";
      for (const auto& p : rep.problems) std::cout << "  " << p << "\n";
      failed = failed || !rep.ok;
      undecided = undecided || rep.minimality == Minimality::undecided;
    }
    if (failed) exit_code = kVerifyFailed;
    else if (undecided) exit_code = kBudget;
  });

  // bench
  std::vector<std::string> bn_in;
  std::string bn_algo = "greedy", bn_import, bn_name = "import", bn_out;
  BudgetFlags bn_budget;
  auto* bn = app.add_subcommand("bench", "Run a solver on bundles and report distances to the hidden optimum");
  bn->add_option("--in", bn_in, "Bundle prefixes")->required();
  bn->add_option("--algo", bn_algo, "greedy or exact")
      ->check(CLI::IsMember({"greedy", "exact"}))
      ->capture_default_str();
  bn->add_option("--import", bn_import, "External results 'id size v1 ... vk' (ids are bundle file names)")
      ->check(CLI::ExistingFile);
  bn->add_option("--import-name", bn_name, "Algorithm label for imported results")->capture_default_str();
  bn->add_option("--out", bn_out, "CSV report");
  bn_budget.attach(bn);
  bn->callback([&] {
    std::vector<BenchInstance> instances;
    for (const auto& prefix : bn_in)
      instances.push_back({std::filesystem::path(prefix).filename().string(), read_bundle(prefix)});
    RunReport rep;
    if (!bn_import.empty()) {
      std::ifstream in(bn_import, std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      rep = import_report(instances, parse_solver_results(text.str()), bn_name);
    } else {
      rep = run_benchmark(instances, bn_algo, bn_budget.budget());
    }
    if (!bn_out.empty()) write_text(bn_out, report_csv(rep));
    else write_report_csv(std::cout, rep);
    std::cerr << report_summary(rep);
    for (const auto& r : rep.rows)
      if (r.algo == "exact-budget") exit_code = kBudget;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInfeasible;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kInfeasible;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return exit_code;
}
