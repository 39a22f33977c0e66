#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/generator.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/solver.hpp"

namespace critgraph {

struct GreedyResult {
  VertexSet cover;
  std::uint64_t steps = 0;  // vertices picked
};

/// Repeatedly takes a vertex of maximum residual degree (lowest index on
/// ties) and deletes its edges until none remain.
GreedyResult greedy_solve(const Graph& g);

enum class Minimality { confirmed, refuted, undecided, skipped };

std::string_view to_string(Minimality m);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;
  Minimality minimality = Minimality::skipped;
  SolveStats stats;
};

/// Checks the hidden cover of a bundle: every edge covered, no edge between
/// two non-cover vertices, and (for optimal bundles with at most
/// exact_limit vertices) that no smaller cover exists. With a tampered
/// cover (size differs from the recorded value) uncovered edges are
/// reported as such; with the recorded size intact they are reported as
/// independence violations of the non-cover side. A minimality check that
/// runs out of budget leaves ok untouched and reports undecided.
VerifyReport verify_bundle(const InstanceBundle& b, const SolveBudget& budget = {}, std::size_t exact_limit = 2000);

struct BenchInstance {
  std::string id;
  InstanceBundle bundle;
};

/// One CSV row. distance = cover_size - reference, where the reference is
/// the bundle's hidden optimum or bound. `optimal` is "1"/"0" against an
/// exact optimum and "upper"/"lower" when the reference is only a bound.
struct RunRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t ell = 0;
  std::string algo;
  std::size_t cover_size = 0;
  std::int64_t distance = 0;
  std::string optimal;
  std::uint64_t steps = 0;  // greedy picks, or branch-and-bound nodes
  double time_ms = 0.0;

  friend bool operator==(const RunRow&, const RunRow&) = default;
};

struct RunReport {
  std::vector<RunRow> rows;

  /// Aggregates over rows whose reference is an exact optimum.
  std::size_t exact_rows() const;
  std::size_t count_optimal() const;
  double avg_distance() const;
  std::int64_t max_distance() const;
};

/// Runs "greedy" or "exact" on every instance, in input order.
RunReport run_benchmark(std::span<const BenchInstance> instances, std::string_view algo, const SolveBudget& budget = {});

struct ImportedResult {
  std::string id;
  VertexSet cover;  // 0-based
};

/// External solver output: one line per instance, "id size v1 ... vk",
/// vertices 1-based. Blank lines and lines starting with '#' are skipped.
std::vector<ImportedResult> parse_solver_results(std::string_view text);

/// Rows for imported covers; each must cover its instance's graph.
RunReport import_report(std::span<const BenchInstance> instances, std::span<const ImportedResult> results,
                        std::string_view algo = "import");

inline constexpr std::string_view kReportHeader = "instance,n,m,ell,algo,cover_size,distance,optimal,steps,time_ms";

std::string report_csv(const RunReport& r);
void write_report_csv(std::ostream& out, const RunReport& r);
RunReport parse_report_csv(std::string_view text);

/// Short per-algorithm summary in the shape of the result tables:
/// rows, #Opt., Avg. and Max. distance.
std::string report_summary(const RunReport& r);

}  // namespace critgraph
