#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/alpha.hpp"
#include "critgraph/extensions.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/rng.hpp"

namespace critgraph {

struct GeneratorConfig {
  std::size_t n = 0;
  std::optional<std::size_t> m;    // edge count; takes precedence over k
  std::optional<double> k;         // m = round(n^k) when m is unset
  std::optional<std::size_t> ell;  // cover size; default_ell(n) when unset
  std::uint64_t seed = 0;
  std::size_t bases = 2;
  double stop_probability = 0.1;  // per step once the cover is near the target
  std::size_t stop_window = 3;    // "near" means within this many of the target
};

/// ceil(n / 2) + ceil(n / 100), capped at n - 1.
std::size_t default_ell(std::size_t n);

/// Edge count requested by the config (m, or round(n^k)).
std::size_t resolve_edges(const GeneratorConfig& cfg);

/// Remaining resources while sampling base graphs: the vertex and cover
/// budget as a lexmin vector, plus the edges still unspent. Every state
/// keeps edges_left >= alpha_edge_lower_bound(alpha) so the leftover cover
/// can always be completed by disjoint cliques.
struct BaseBudget {
  AlphaVector alpha;
  std::size_t edges_left = 0;

  BaseBudget(std::size_t n, std::size_t c, std::size_t m);
  BaseBudget(AlphaVector a, std::size_t m) : alpha(std::move(a)), edges_left(m) {}

  std::size_t n_rem() const { return alpha.n(); }
  std::size_t c_rem() const { return alpha.c(); }
};

/// True if a K3 start fits the budget.
bool base_fits(const BaseBudget& budget);

struct StopRule {
  double probability = 0.1;
  std::size_t window = 3;
};

/// Random walk from K3 over parallel and chain extensions. Each step picks
/// uniformly among the feasible kinds, then uniformly among feasible sites
/// (a vertex for parallel, an oriented edge for chain). Stops at
/// target_cover, when no step fits, or at random once the cover is within
/// the stop window. The budget is charged for everything used.
TrackedGraph sample_base_graph(CounterRng& rng, std::size_t target_cover, BaseBudget& budget, StopRule stop = {});

/// A graph with a planted cover U; V lists the remaining vertices.
struct Triple {
  Graph graph;
  VertexSet U;
  VertexSet V;
};

/// Disjoint union of the parts; U is the union of their covers.
/// Requires total cover == ell, total vertices <= n and total edges <= m.
Triple assemble_g1(std::span<const TrackedGraph> parts, std::size_t ell, std::size_t m, std::size_t n);

/// Appends isolated vertices to V until the graph has n vertices.
Triple pad_vertices_g2(const Triple& t, std::size_t n);

/// Adds m - |E| edges drawn uniformly without replacement from the pairs
/// in U x (U + V) that are not yet edges.
Triple fill_edges_g3(const Triple& t, std::size_t m, CounterRng& rng);

/// Draws `count` distinct pairs {a, b}, a < b, a < u, over vertices 0..n-1,
/// avoiding `existing` (all of which must lie in that pool). Sorted output.
std::vector<Edge> sample_pairs(std::size_t n, std::size_t u, std::span<const Edge> existing, std::size_t count,
                               CounterRng& rng);

enum class BoundKind { optimal, upper, lower };

std::string_view to_string(BoundKind b);
BoundKind parse_bound_kind(std::string_view s);

/// A generated instance with its hidden solution data.
struct InstanceBundle {
  std::string generator;  // "hard", "structureless" or "witzel"
  Graph graph;
  VertexSet cover;  // empty when only a lower bound is known
  BoundKind bound_kind = BoundKind::optimal;
  std::size_t bound = 0;  // cover size, or the bound it is measured against

  // parameters
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<double> k;
  std::size_t ell = 0;
  std::uint64_t seed = 0;
  std::size_t bases = 0;
  std::optional<std::size_t> n_c;
  std::optional<std::size_t> num_cliques;
  std::optional<std::size_t> clique_size;
  StopRule stop;  // used by "hard" only

  std::uint64_t permutation_seed = 0;
  std::vector<Vertex> permutation;  // old id -> new id; not stored in files
  std::vector<std::string> base_traces;

  bool cover_is_optimal() const { return bound_kind == BoundKind::optimal; }
};

/// Throws InfeasibleError (naming both bounds) unless
/// alpha_edge_lower_bound(lexmin_alpha(n, ell)) <= m <= max_edges(n, ell).
void check_feasible(std::size_t n, std::size_t ell, std::size_t m);

/// Hidden-optimum instance: sampled critical bases, clique fillers for the
/// leftover cover, padding, edge fill, random relabelling.
InstanceBundle generate_hard(const GeneratorConfig& cfg);

/// m edges drawn uniformly from the pairs touching V_C = {0, ..., n_c - 1},
/// then relabelled. V_C is recorded as an upper bound only.
InstanceBundle generate_structureless(std::size_t n, std::size_t m, std::size_t n_c, std::uint64_t seed);

/// Disjoint cliques plus uniformly drawn inter-clique edges up to m_target.
/// Records the lower bound num_cliques * (clique_size - 1).
InstanceBundle generate_witzel(std::size_t num_cliques, std::size_t clique_size, std::size_t m_target,
                               std::uint64_t seed);

/// Runs the recorded generator again from the bundle's parameters.
InstanceBundle regenerate(const InstanceBundle& b);

/// Sidecar JSON text (solution data and parameters).
std::string sidecar_json(const InstanceBundle& b);

/// Writes prefix.dimacs and prefix.json.
void write_bundle(const std::filesystem::path& prefix, const InstanceBundle& b);
/// Reads both files back; throws FormatError on malformed or inconsistent data.
InstanceBundle read_bundle(const std::filesystem::path& prefix);
InstanceBundle parse_bundle(std::string_view dimacs_text, std::string_view json_text);

}  // namespace critgraph
