#include "critgraph/criticality.hpp"

#include <algorithm>

#include "critgraph/errors.hpp"
#include "critgraph/parallel.hpp"

namespace critgraph {

std::string_view to_string(Criticality c) {
  switch (c) {
    case Criticality::critical: return "critical";
    case Criticality::reducible: return "reducible";
    case Criticality::unknown: return "unknown";
  }
  return "?";
}

namespace {

enum class EdgeOutcome { lowers, keeps, unknown };

struct EdgeCheck {
  EdgeOutcome outcome = EdgeOutcome::unknown;
  std::uint64_t nodes = 0;
};

// Does deleting e bring the minimum cover down to c - 1? Any such cover of
// G - e avoids both endpoints, otherwise it would already cover G.
EdgeCheck check_edge(const Graph& g, Edge e, std::size_t c, const SolveBudget& budget) {
  const Vertex out[2] = {e.u, e.v};
  const auto r = mvc_constrained(delete_edge(g, e), {}, out, budget, c - 1);
  EdgeCheck res;
  res.nodes = r.stats.nodes;
  switch (r.status) {
    case SolveStatus::exact: res.outcome = EdgeOutcome::lowers; break;
    case SolveStatus::above_cutoff:
    case SolveStatus::infeasible: res.outcome = EdgeOutcome::keeps; break;
    case SolveStatus::budget_exceeded: res.outcome = EdgeOutcome::unknown; break;
  }
  return res;
}

// Scans edges in the given order. The first edge whose deletion keeps the
// cover size is the witness; chunks keep the answer independent of the
// worker count while still allowing an early exit.
void scan(const Graph& g, std::span<const Edge> edges, const SolveBudget& budget, std::size_t workers,
          CriticalityVerdict& v, bool& saw_unknown) {
  const std::size_t chunk = workers <= 1 ? 1 : workers * 4;
  for (std::size_t start = 0; start < edges.size(); start += chunk) {
    const std::size_t len = std::min(chunk, edges.size() - start);
    const auto results = parallel_map(
        len, workers, [&](std::size_t i) { return check_edge(g, edges[start + i], v.base_cover_size, budget); });
    for (std::size_t i = 0; i < len; ++i) {
      v.nodes += results[i].nodes;
      if (results[i].outcome == EdgeOutcome::unknown) saw_unknown = true;
    }
    for (std::size_t i = 0; i < len; ++i)
      if (results[i].outcome == EdgeOutcome::keeps) {
        v.status = Criticality::reducible;
        v.witness_edge = edges[start + i];
        return;
      }
  }
}

}  // namespace

CriticalityVerdict is_critical_on(const Graph& g, std::span<const Edge> edges, std::size_t base_cover_size,
                                  const SolveBudget& budget, std::size_t workers) {
  CriticalityVerdict v;
  v.base_cover_size = base_cover_size;
  for (const Edge& e : edges)
    if (!g.has_edge(e)) throw InvalidArgument("edge to test is not in the graph");
  bool saw_unknown = false;
  scan(g, edges, budget, workers, v, saw_unknown);
  if (v.status != Criticality::reducible) v.status = saw_unknown ? Criticality::unknown : Criticality::critical;
  return v;
}

CriticalityVerdict is_critical(const Graph& g, const SolveBudget& budget, std::size_t workers) {
  if (!is_connected(g)) throw InvalidArgument("criticality is defined for connected graphs only");
  CriticalityVerdict v;
  const auto base = mvc(g, budget);
  v.nodes = base.stats.nodes;
  if (!base.exact()) return v;
  v.base_cover_size = base.size;

  bool saw_unknown = false;
  const auto cut = articulation_vertices(g);
  if (!cut.empty()) {
    // A cut vertex guarantees reducibility; look for the witness around it
    // first, then anywhere else.
    std::vector<Edge> near, rest;
    for (const Edge& e : g.edges()) (e.u == cut.front() || e.v == cut.front() ? near : rest).push_back(e);
    scan(g, near, budget, workers, v, saw_unknown);
    if (v.status == Criticality::reducible) return v;
    scan(g, rest, budget, workers, v, saw_unknown);
  } else {
    scan(g, g.edges(), budget, workers, v, saw_unknown);
  }
  if (v.status != Criticality::reducible) v.status = saw_unknown ? Criticality::unknown : Criticality::critical;
  return v;
}

namespace {

std::size_t exact_cover_size(const Graph& g, const SolveBudget& budget) {
  const auto r = mvc(g, budget);
  if (!r.exact()) throw BudgetExhausted("minimum cover could not be determined within the budget");
  return r.size;
}

// Is there a cover of size c satisfying the constraints?
bool fits(const Graph& g, std::span<const Vertex> in, std::span<const Vertex> out, std::size_t c,
          const SolveBudget& budget) {
  const auto r = mvc_constrained(g, in, out, budget, c);
  if (r.status == SolveStatus::budget_exceeded)
    throw BudgetExhausted("constrained cover could not be determined within the budget");
  return r.exact();
}

void check_set(const Graph& g, std::span<const Vertex> U) {
  if (U.empty()) throw InvalidArgument("vertex set must be nonempty");
  for (Vertex u : U)
    if (u >= g.num_vertices()) throw InvalidArgument("vertex out of range");
}

}  // namespace

bool double_cover_holds(const Graph& g, Edge e, const SolveBudget& budget) {
  if (!g.has_edge(e)) throw InvalidArgument("edge is not in the graph");
  const Vertex both[2] = {e.u, e.v};
  return fits(g, both, {}, exact_cover_size(g, budget), budget);
}

bool is_vco(const Graph& g, std::span<const Vertex> U, const SolveBudget& budget) {
  check_set(g, U);
  return !fits(g, U, {}, exact_cover_size(g, budget), budget);
}

bool is_vcoo(const Graph& g, std::span<const Vertex> U, const SolveBudget& budget) {
  check_set(g, U);
  const auto c = exact_cover_size(g, budget);
  if (fits(g, U, {}, c, budget)) return false;
  VertexSet set(U.begin(), U.end());
  normalize(set);
  for (Vertex u : set) {
    VertexSet others;
    for (Vertex w : set)
      if (w != u) others.push_back(w);
    const Vertex out[1] = {u};
    if (!fits(g, others, out, c, budget)) return false;
  }
  return true;
}

Graph gamma_extend(const Graph& g, std::span<const Vertex> U) {
  check_set(g, U);
  std::vector<Edge> edges(g.edges());
  const auto fresh = static_cast<Vertex>(g.num_vertices());
  for (Vertex u : U) edges.emplace_back(u, fresh);
  return Graph(g.num_vertices() + 1, edges);
}

}  // namespace critgraph
