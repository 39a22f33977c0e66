#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace critgraph {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // kept sorted and duplicate free

/// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in ascending (u, v) order and every adjacency list is
/// sorted, so two graphs compare equal iff they have identical labelled
/// edge sets. Mutating operations return new values.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from raw pairs. Duplicates collapse; self-loops and
  /// endpoints outside [0, n) throw InvalidArgument.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.num_vertices() == b.num_vertices(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// Returns g without e; throws InvalidArgument if e is not an edge.
Graph delete_edge(const Graph& g, Edge e);
/// Returns g with e added; throws if e is present or invalid.
Graph add_edge(const Graph& g, Edge e);
/// Appends `count` isolated vertices.
Graph add_vertices(const Graph& g, std::size_t count);

/// Removes the listed vertices and relabels the survivors in order.
/// `old_to_new` (if non-null) receives the mapping, with removed vertices
/// mapped to kNoVertex.
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);
Graph remove_vertices(const Graph& g, std::span<const Vertex> removed, std::vector<Vertex>* old_to_new = nullptr);

/// Relabels vertex v as perm[v]. perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union; vertices of b are shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(std::size_t k);
Graph cycle_graph(std::size_t k);
Graph path_graph(std::size_t k);

/// Neighbor-equivalence: u, v adjacent with N(u)\{v} == N(v)\{u}.
bool neighbor_equivalent(const Graph& g, Vertex u, Vertex v);

struct StructureReport {
  bool connected = true;
  VertexSet articulation_vertices;
  std::vector<VertexSet> equivalence_classes;  // ordered by smallest member
};

bool is_connected(const Graph& g);
VertexSet articulation_vertices(const Graph& g);
std::vector<VertexSet> equivalence_classes(const Graph& g);
StructureReport analyze(const Graph& g);

struct Permuted {
  Graph graph;
  std::vector<Vertex> permutation;  // old id -> new id
};

/// Uniform random relabelling derived from `seed` (bit-exact across platforms).
Permuted permute(const Graph& g, std::uint64_t seed);

/// Sorts and deduplicates in place; returns the set for chaining.
VertexSet& normalize(VertexSet& s);
bool contains(const VertexSet& sorted, Vertex v);

}  // namespace critgraph
