#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "critgraph/graph.hpp"
#include "critgraph/solver.hpp"

namespace critgraph {

enum class Criticality { critical, reducible, unknown };

std::string_view to_string(Criticality c);

struct CriticalityVerdict {
  Criticality status = Criticality::unknown;
  std::optional<Edge> witness_edge;  // set iff reducible: mvc(G - e) == c(G)
  std::size_t base_cover_size = 0;
  std::uint64_t nodes = 0;  // search nodes summed over all solves
};

/// Decides whether deleting any edge of the connected graph g lowers its
/// minimum cover. Graphs with an articulation vertex are reported reducible
/// after a witness search that starts at that vertex. Each per-edge test is
/// the decision "mvc(G - e) <= c - 1", posed as a cover of G - e avoiding
/// both endpoints of e. The budget applies to every individual solve; an
/// exhausted solve makes the verdict unknown unless another edge already
/// proves reducibility. The result does not depend on `workers`.
///
/// Throws InvalidArgument for disconnected graphs.
CriticalityVerdict is_critical(const Graph& g, const SolveBudget& budget = {}, std::size_t workers = 1);

/// Same verdict, but only the listed edges are tested (their order is the
/// witness order). Used when symmetry shows the remaining edges equivalent.
CriticalityVerdict is_critical_on(const Graph& g, std::span<const Edge> edges, std::size_t base_cover_size,
                                  const SolveBudget& budget = {}, std::size_t workers = 1);

/// Some minimum cover contains both endpoints of e.
bool double_cover_holds(const Graph& g, Edge e, const SolveBudget& budget = {});

/// No minimum cover contains all of U.
bool is_vco(const Graph& g, std::span<const Vertex> U, const SolveBudget& budget = {});

/// is_vco, and for every u in U some minimum cover contains U \ {u} but not u.
bool is_vcoo(const Graph& g, std::span<const Vertex> U, const SolveBudget& budget = {});

/// Adds one vertex (id n) adjacent to exactly U.
Graph gamma_extend(const Graph& g, std::span<const Vertex> U);

}  // namespace critgraph
