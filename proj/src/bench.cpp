#include "critgraph/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "critgraph/errors.hpp"

namespace critgraph {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string edge_text(const Edge& e) { return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1); }

template <typename T>
T parse_number(std::string_view tok, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw FormatError(std::string(what) + ": bad number '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  auto lines = split(text, '\n');
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  return lines;
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string optimal_flag(const InstanceBundle& b, std::int64_t distance) {
  switch (b.bound_kind) {
    case BoundKind::optimal: return distance == 0 ? "1" : "0";
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
  }
  return "?";
}

RunRow base_row(const BenchInstance& inst, std::string_view algo, std::size_t size) {
  if (inst.id.find_first_of(",\n ") != std::string::npos)
    throw InvalidArgument("instance id '" + inst.id + "' contains a comma, space or newline");
  const auto& b = inst.bundle;
  RunRow row;
  row.instance = inst.id;
  row.n = b.graph.num_vertices();
  row.m = b.graph.num_edges();
  row.ell = b.bound;
  row.algo = std::string(algo);
  row.cover_size = size;
  row.distance = static_cast<std::int64_t>(size) - static_cast<std::int64_t>(b.bound);
  row.optimal = optimal_flag(b, row.distance);
  return row;
}

bool exact_reference(const RunRow& r) { return r.optimal == "1" || r.optimal == "0"; }

}  // namespace

GreedyResult greedy_solve(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> taken(n, 0);
  GreedyResult out;
  while (true) {
    Vertex best = 0;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < n; ++v)
      if (deg[v] > best_deg) {
        best_deg = deg[v];
        best = v;
      }
    if (best_deg == 0) break;
    taken[best] = 1;
    deg[best] = 0;
    for (Vertex w : g.neighbors(best))
      if (!taken[w]) --deg[w];
    out.cover.push_back(best);
    ++out.steps;
  }
  normalize(out.cover);
  return out;
}

std::string_view to_string(Minimality m) {
  switch (m) {
    case Minimality::confirmed: return "confirmed";
    case Minimality::refuted: return "refuted";
    case Minimality::undecided: return "undecided";
    case Minimality::skipped: return "skipped";
  }
  return "?";
}

VerifyReport verify_bundle(const InstanceBundle& b, const SolveBudget& budget, std::size_t exact_limit) {
  VerifyReport rep;
  const Graph& g = b.graph;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.problems.push_back(std::move(msg));
  };
  for (Vertex v : b.cover)
    if (v >= g.num_vertices()) fail("cover vertex " + std::to_string(v + 1) + " out of range");
  if (!rep.ok) return rep;
  if (b.bound_kind == BoundKind::lower) {
    if (!b.cover.empty()) fail("lower-bound bundle carries a cover");
    if (b.bound >= g.num_vertices() && g.num_edges() > 0) fail("lower bound not below n");
    return rep;
  }

  const bool size_intact = b.cover.size() == b.bound;
  if (!size_intact)
    fail("cover size " + std::to_string(b.cover.size()) + " differs from recorded " + std::to_string(b.bound));
  std::size_t reported = 0;
  for (const Edge& e : g.edges()) {
    if (contains(b.cover, e.u) || contains(b.cover, e.v)) continue;
    if (++reported > 20) continue;
    fail((size_intact ? "independence violation: edge " : "uncovered edge ") + edge_text(e));
  }
  if (reported > 20) fail(std::to_string(reported - 20) + " more edges outside the cover");

  if (rep.ok && b.bound_kind == BoundKind::optimal && g.num_vertices() <= exact_limit) {
    if (b.cover.empty()) {
      rep.minimality = Minimality::confirmed;
    } else {
      const auto r = mvc_constrained(g, {}, {}, budget, b.cover.size() - 1);
      rep.stats = r.stats;
      if (r.status == SolveStatus::above_cutoff) {
        rep.minimality = Minimality::confirmed;
      } else if (r.exact()) {
        rep.minimality = Minimality::refuted;
        fail("cover not minimum: found one of size " + std::to_string(r.size));
      } else {
        rep.minimality = Minimality::undecided;
      }
    }
  }
  return rep;
}

std::size_t RunReport::exact_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), exact_reference));
}

std::size_t RunReport::count_optimal() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RunRow& r) { return r.optimal == "1"; }));
}

double RunReport::avg_distance() const {
  std::int64_t sum = 0;
  std::size_t cnt = 0;
  for (const auto& r : rows)
    if (exact_reference(r)) {
      sum += r.distance;
      ++cnt;
    }
  return cnt ? static_cast<double>(sum) / static_cast<double>(cnt) : 0.0;
}

std::int64_t RunReport::max_distance() const {
  std::int64_t best = 0;
  for (const auto& r : rows)
    if (exact_reference(r)) best = std::max(best, r.distance);
  return best;
}

RunReport run_benchmark(std::span<const BenchInstance> instances, std::string_view algo, const SolveBudget& budget) {
  if (algo != "greedy" && algo != "exact") throw InvalidArgument("unknown algorithm '" + std::string(algo) + "'");
  RunReport rep;
  for (const auto& inst : instances) {
    const auto start = std::chrono::steady_clock::now();
    if (algo == "greedy") {
      const auto r = greedy_solve(inst.bundle.graph);
      auto row = base_row(inst, algo, r.cover.size());
      row.steps = r.steps;
      row.time_ms = elapsed_ms(start);
      rep.rows.push_back(std::move(row));
    } else {
      const auto r = mvc(inst.bundle.graph, budget);
      auto row = base_row(inst, r.exact() ? "exact" : "exact-budget", r.size);
      row.steps = r.stats.nodes;
      row.time_ms = elapsed_ms(start);
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::vector<ImportedResult> parse_solver_results(std::string_view text) {
  std::vector<ImportedResult> out;
  std::size_t line_no = 0;
  for (auto line : lines_of(text)) {
    ++line_no;
    std::vector<std::string_view> tok;
    for (auto t : split(line, ' '))
      if (!t.empty()) tok.push_back(t);
    if (tok.empty() || tok[0].front() == '#') continue;
    const std::string where = "result line " + std::to_string(line_no);
    if (tok.size() < 2) throw FormatError(where + ": expected 'id size v1 ... vk'");
    const auto size = parse_number<std::size_t>(tok[1], where);
    if (tok.size() != size + 2)
      throw FormatError(where + ": declares " + std::to_string(size) + " vertices, lists " + std::to_string(tok.size() - 2));
    ImportedResult r;
    r.id = std::string(tok[0]);
    for (std::size_t i = 2; i < tok.size(); ++i) {
      const auto v = parse_number<std::uint64_t>(tok[i], where);
      if (v == 0) throw FormatError(where + ": vertices are 1-based");
      r.cover.push_back(static_cast<Vertex>(v - 1));
    }
    normalize(r.cover);
    if (r.cover.size() != size) throw FormatError(where + ": duplicate vertices");
    out.push_back(std::move(r));
  }
  return out;
}

RunReport import_report(std::span<const BenchInstance> instances, std::span<const ImportedResult> results,
                        std::string_view algo) {
  std::map<std::string, const ImportedResult*> by_id;
  for (const auto& r : results)
    if (!by_id.emplace(r.id, &r).second) throw FormatError("duplicate result for instance '" + r.id + "'");
  RunReport rep;
  for (const auto& inst : instances) {
    const auto it = by_id.find(inst.id);
    if (it == by_id.end()) throw InvalidArgument("no imported result for instance '" + inst.id + "'");
    const auto& cover = it->second->cover;
    if ((!cover.empty() && cover.back() >= inst.bundle.graph.num_vertices()) || !is_cover(inst.bundle.graph, cover))
      throw InvalidArgument("imported result for '" + inst.id + "' is not a vertex cover");
    rep.rows.push_back(base_row(inst, algo, cover.size()));
  }
  return rep;
}

void write_report_csv(std::ostream& out, const RunReport& r) {
  out << kReportHeader << '\n';
  for (const auto& row : r.rows)
    out << row.instance << ',' << row.n << ',' << row.m << ',' << row.ell << ',' << row.algo << ',' << row.cover_size
        << ',' << row.distance << ',' << row.optimal << ',' << row.steps << ',' << format_ms(row.time_ms) << '\n';
}

std::string report_csv(const RunReport& r) {
  std::ostringstream out;
  write_report_csv(out, r);
  return out.str();
}

RunReport parse_report_csv(std::string_view text) {
  auto lines = lines_of(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines[0] != kReportHeader) throw FormatError("report CSV: missing or wrong header");
  RunReport rep;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = "report line " + std::to_string(i + 1);
    const auto f = split(lines[i], ',');
    if (f.size() != 10) throw FormatError(where + ": expected 10 fields");
    RunRow row;
    row.instance = std::string(f[0]);
    row.n = parse_number<std::size_t>(f[1], where);
    row.m = parse_number<std::size_t>(f[2], where);
    row.ell = parse_number<std::size_t>(f[3], where);
    row.algo = std::string(f[4]);
    row.cover_size = parse_number<std::size_t>(f[5], where);
    row.distance = parse_number<std::int64_t>(f[6], where);
    row.optimal = std::string(f[7]);
    row.steps = parse_number<std::uint64_t>(f[8], where);
    row.time_ms = parse_number<double>(f[9], where);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string report_summary(const RunReport& r) {
  std::map<std::string, RunReport> by_algo;
  std::vector<std::string> order;
  for (const auto& row : r.rows) {
    if (!by_algo.count(row.algo)) order.push_back(row.algo);
    by_algo[row.algo].rows.push_back(row);
  }
  std::ostringstream out;
  out << "algo rows exact_ref #opt avg_distance max_distance\n";
  for (const auto& algo : order) {
    const auto& sub = by_algo[algo];
    char avg[32];
    std::snprintf(avg, sizeof avg, "%.1f", sub.avg_distance());
    out << algo << ' ' << sub.rows.size() << ' ' << sub.exact_rows() << ' ' << sub.count_optimal() << ' ' << avg << ' '
        << sub.max_distance() << '\n';
  }
  return out.str();
}

}  // namespace critgraph
