#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/solver.hpp"

namespace critgraph {

enum class StepKind { seed, parallel, chain, split };

std::string_view to_string(StepKind k);

/// One line of a construction trace.
///
/// seed:     `clique` = k for K_k, or 0 with `seed_graph`/`cover` set for a
///           verified seed
/// parallel: `v` is the vertex copied
/// chain:    edge (u, v); x is attached to u and y to v
/// split:    vertex `u` and neighbour subset `F`
struct ExtensionStep {
  StepKind kind = StepKind::seed;
  std::size_t clique = 0;
  std::optional<Graph> seed_graph;
  VertexSet cover;
  Vertex u = 0;
  Vertex v = 0;
  VertexSet F;
  std::vector<Vertex> new_vertices;

  friend bool operator==(const ExtensionStep&, const ExtensionStep&) = default;
};

/// A graph together with a known minimum cover and the steps that built it.
struct TrackedGraph {
  Graph graph;
  VertexSet cover;
  bool critical = true;
  std::vector<ExtensionStep> trace;

  std::size_t cover_size() const { return cover.size(); }
};

/// K_k with cover {0, ..., k-2}. k >= 1.
TrackedGraph seed_clique(std::size_t k);
inline TrackedGraph seed_k1() { return seed_clique(1); }
inline TrackedGraph seed_k2() { return seed_clique(2); }
inline TrackedGraph seed_k3() { return seed_clique(3); }

/// Any connected graph that is_critical confirms, with its exact cover.
/// Throws InvalidArgument if the graph is reducible, BudgetExhausted if the
/// verdict or cover cannot be established.
TrackedGraph seed_verified(const Graph& g, const SolveBudget& budget = {});

/// New vertex n adjacent to v and all of N(v); the new vertex joins the cover.
TrackedGraph parallel_extend(const TrackedGraph& tg, Vertex v);

/// Replaces edge {u, v} by the path u - x - y - v with x = n, y = n + 1.
/// y joins the cover if u is in it, otherwise x does. Requires n >= 3.
TrackedGraph chain_extend(const TrackedGraph& tg, Vertex u, Vertex v);
inline TrackedGraph chain_extend(const TrackedGraph& tg, Edge e) { return chain_extend(tg, e.u, e.v); }

/// Splits u: new vertices v = n, w = n + 1, edges u - v - w and w - f for
/// f in F, edges u - f removed. w joins the cover if u is in it, otherwise v
/// does. F must be a nonempty proper subset of N(u); requires n >= 3.
TrackedGraph split_vertex(const TrackedGraph& tg, Vertex u, std::span<const Vertex> F);

struct PasteResult {
  Graph graph;
  std::size_t cover_size = 0;
};

/// Pastes tg2 into tg1 along edge e of tg1 and vertex w of tg2: both graphs
/// are joined, e and w are removed and every former neighbour x of w is
/// connected to assignment[x], an endpoint of e. Vertices of tg1 keep their
/// ids, the remaining vertices of tg2 follow in order. Only the cover size
/// is known afterwards: c1 + c2 - 1.
PasteResult paste(const TrackedGraph& tg1, Edge e, const TrackedGraph& tg2, Vertex w,
                  const std::map<Vertex, Vertex>& assignment);

struct Shrunk {
  Graph graph;
  std::optional<VertexSet> cover;  // mapped known cover, if one was given
  std::vector<Vertex> old_to_new;  // removed vertices map to kNoVertex
};

/// Removes u, which must be adjacent and neighbour-equivalent to v.
Shrunk shrink_parallel(const Graph& g, Vertex u, Vertex v, const std::optional<VertexSet>& known_cover = {});

/// Removes the adjacent degree-2 vertices x, y and joins their outer
/// neighbours a (of x) and b (of y). Throws if a == b. If {a, b} is already
/// an edge it is kept once.
Shrunk shrink_chain(const Graph& g, Vertex x, Vertex y, const std::optional<VertexSet>& known_cover = {});

/// Text form of a trace, one step per line.
std::string serialize_trace(std::span<const ExtensionStep> trace);
std::vector<ExtensionStep> parse_trace(std::string_view text);

/// Rebuilds a tracked graph from its trace; the result is identical to the
/// one that produced the trace.
TrackedGraph replay(std::span<const ExtensionStep> trace);

}  // namespace critgraph
