#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "critgraph/graph.hpp"

namespace critgraph {

struct SolveBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{60'000};
};

enum class SolveStatus {
  exact,            // size is the minimum, cover certifies it
  budget_exceeded,  // size/cover are the best found so far
  infeasible,       // forced_out contains both endpoints of an edge
  above_cutoff,     // minimum is strictly larger than the requested cutoff
};

std::string_view to_string(SolveStatus s);

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::exact;
  std::size_t size = 0;
  VertexSet cover;
  SolveStats stats;

  bool exact() const { return status == SolveStatus::exact; }
};

/// Minimum vertex cover by branch and bound.
///
/// Branches on a maximum-degree vertex v (lowest index on ties): either v
/// joins the cover or all of N(v) does. Degree-0/1 vertices are reduced
/// eagerly, components of maximum degree 2 (cycles) are closed directly and
/// a greedy clique partition gives the lower bound. Deterministic for a
/// fixed graph; the result does not depend on the budget when exact.
SolveResult mvc(const Graph& g, const SolveBudget& budget = {});

/// Minimum cover containing forced_in and avoiding forced_out.
///
/// With a cutoff the search only looks for covers of size <= cutoff and
/// reports above_cutoff when none exists, which is the decision form used
/// by the criticality checks. Throws InvalidArgument if the constraint sets
/// overlap or name unknown vertices.
SolveResult mvc_constrained(const Graph& g, std::span<const Vertex> forced_in, std::span<const Vertex> forced_out,
                            const SolveBudget& budget = {}, std::optional<std::size_t> cutoff = std::nullopt);

bool is_cover(const Graph& g, std::span<const Vertex> s);

}  // namespace critgraph
