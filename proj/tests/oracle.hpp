#pragma once

// Exhaustive reference implementations used only by the tests. Everything
// here enumerates vertex subsets directly and shares no code with the
// branch-and-bound solver.

#include <algorithm>
#include <bit>
#include <numeric>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "critgraph/graph.hpp"
#include "critgraph/rng.hpp"

namespace oracle {

using critgraph::Edge;
using critgraph::Graph;
using critgraph::Vertex;
using critgraph::VertexSet;

inline std::uint32_t mask_of(const VertexSet& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

inline bool covers(const Graph& g, std::uint32_t mask) {
  for (const Edge& e : g.edges())
    if (!((mask >> e.u) & 1u) && !((mask >> e.v) & 1u)) return false;
  return true;
}

/// Minimum cover size among subsets containing `in` and disjoint from `out`;
/// nullopt if no such cover exists. n must be at most 24.
inline std::optional<std::size_t> min_cover(const Graph& g, std::uint32_t in = 0, std::uint32_t out = 0) {
  const std::size_t n = g.num_vertices();
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & in) != in || (mask & out) != 0) continue;
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (best && size >= *best) continue;
    if (covers(g, mask)) best = size;
  }
  return best;
}

/// All minimum covers as bitmasks.
inline std::vector<std::uint32_t> all_min_covers(const Graph& g) {
  const auto c = *min_cover(g);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << g.num_vertices()); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == c && covers(g, mask)) out.push_back(mask);
  return out;
}

/// Maximum independent set size by enumeration.
inline std::size_t max_independent_set(const Graph& g) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.num_vertices()); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (((mask >> e.u) & 1u) && ((mask >> e.v) & 1u)) {
        ok = false;
        break;
      }
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

/// Edge-criticality straight from the definition.
inline bool critical(const Graph& g) {
  const auto c = *min_cover(g);
  for (const Edge& e : g.edges())
    if (*min_cover(critgraph::delete_edge(g, e)) >= c) return false;
  return true;
}

/// Does some minimum cover contain both endpoints of e?
inline bool double_cover(const Graph& g, Edge e) {
  return *min_cover(g, (1u << e.u) | (1u << e.v)) == *min_cover(g);
}

/// Isomorphism by trying every relabelling (n <= 9).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<Vertex> perm(a.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges())
      if (!b.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Circulant graph straight from the definition: i ~ i + j (mod n).
inline Graph circulant(std::size_t n, std::initializer_list<std::size_t> offsets) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t j : offsets) {
      const auto w = static_cast<Vertex>((i + j) % n);
      if (w != i) edges.emplace_back(i, w);
    }
  return Graph(n, edges);
}

/// Lexicographically smallest clique-count vector (compared from the
/// largest size down) over all partitions of n into exactly n - c parts,
/// found by enumerating every partition. counts[i] = cliques of size i.
inline std::vector<std::size_t> lexmin_counts(std::size_t n, std::size_t c) {
  const std::size_t parts = n - c;
  std::vector<std::size_t> best, counts(n + 1, 0);
  auto better = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t i = n; i >= 1; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  // parts in nonincreasing order, each at most `cap`
  auto rec = [&](auto&& self, std::size_t left, std::size_t slots, std::size_t cap) -> void {
    if (slots == 0) {
      if (left == 0 && (best.empty() || better(counts, best))) best = counts;
      return;
    }
    if (left < slots || left > slots * cap) return;
    for (std::size_t p = std::min(cap, left); p >= 1; --p) {
      ++counts[p];
      self(self, left - p, slots - 1, p);
      --counts[p];
    }
  };
  rec(rec, n, parts, n);
  return best;
}

/// G(n, p) style random graph for property tests.
inline Graph random_graph(std::size_t n, double p, critgraph::CounterRng& rng) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rng.unit() < p) edges.emplace_back(a, b);
  return Graph(n, edges);
}

}  // namespace oracle
