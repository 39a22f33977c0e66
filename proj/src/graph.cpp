#include "critgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "critgraph/errors.hpp"
#include "critgraph/rng.hpp"

namespace critgraph {

namespace {

std::string pair_str(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u >= n || raw.v >= n) throw InvalidArgument("edge endpoint out of range: " + pair_str(raw.u, raw.v));
    if (raw.u == raw.v) throw InvalidArgument("self-loop at vertex " + std::to_string(raw.u));
    edges_.emplace_back(raw.u, raw.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (std::size_t v = 0; v < n; ++v) adjacency_[v].reserve(deg[v]);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    Edge e;
    e.u = a;
    e.v = b;
    list.push_back(e);
  }
  *this = Graph(n, list);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= num_vertices() || b >= num_vertices()) return false;
  const auto& na = adjacency_[a];
  const auto& nb = adjacency_[b];
  if (na.size() <= nb.size()) return std::binary_search(na.begin(), na.end(), b);
  return std::binary_search(nb.begin(), nb.end(), a);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw InvalidArgument("edge " + pair_str(e.u, e.v) + " not in graph");
  std::vector<Edge> kept;
  kept.reserve(g.num_edges() - 1);
  const Edge target(e.u, e.v);
  for (const Edge& f : g.edges())
    if (f != target) kept.push_back(f);
  return Graph(g.num_vertices(), kept);
}

Graph add_edge(const Graph& g, Edge e) {
  if (g.has_edge(e)) throw InvalidArgument("edge " + pair_str(e.u, e.v) + " already present");
  std::vector<Edge> all = g.edges();
  all.push_back(e);
  return Graph(g.num_vertices(), all);
}

Graph add_vertices(const Graph& g, std::size_t count) { return Graph(g.num_vertices() + count, g.edges()); }

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed, std::vector<Vertex>* old_to_new) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> map(n, 0);
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) {
    if (v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  Vertex next = 0;
  for (std::size_t v = 0; v < n; ++v) map[v] = gone[v] ? kNoVertex : next++;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) kept.emplace_back(map[e.u], map[e.v]);
  if (old_to_new) *old_to_new = map;
  return Graph(next, kept);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.num_vertices();
  if (perm.size() != n) throw InvalidArgument("permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> mapped;
  mapped.reserve(g.num_edges());
  for (const Edge& e : g.edges()) mapped.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n, mapped);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> all = a.edges();
  for (const Edge& e : b.edges()) all.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.num_vertices() + b.num_vertices(), all);
}

Graph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b) edges.emplace_back(a, b);
  return Graph(k, edges);
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < k; ++a) edges.emplace_back(a, static_cast<Vertex>((a + 1) % k));
  return Graph(k, edges);
}

Graph path_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < k; ++a) edges.emplace_back(a, a + 1);
  return Graph(k, edges);
}

bool neighbor_equivalent(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) return false;
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  if (nu.size() != nv.size()) return false;
  std::size_t i = 0, j = 0;
  while (true) {
    while (i < nu.size() && nu[i] == v) ++i;
    while (j < nv.size() && nv[j] == u) ++j;
    if (i == nu.size() || j == nv.size()) return i == nu.size() && j == nv.size();
    if (nu[i] != nv[j]) return false;
    ++i;
    ++j;
  }
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

VertexSet articulation_vertices(const Graph& g) {
  // Iterative Hopcroft-Tarjan low-link over every component.
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<std::size_t> child_count(n, 0), next_edge(n, 0);
  std::vector<char> is_cut(n, 0);
  std::size_t timer = 0;
  std::vector<Vertex> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto nb = g.neighbors(v);
      if (next_edge[v] < nb.size()) {
        const Vertex w = nb[next_edge[v]++];
        if (disc[w] == kUnvisited) {
          parent[w] = v;
          ++child_count[v];
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[v];
      if (p == kNoVertex) {
        if (child_count[v] > 1) is_cut[v] = 1;
        continue;
      }
      low[p] = std::min(low[p], low[v]);
      if (parent[p] != kNoVertex && low[v] >= disc[p]) is_cut[p] = 1;
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

std::vector<VertexSet> equivalence_classes(const Graph& g) {
  // The relation is transitive on adjacent pairs, so union-find over the
  // equivalent edges yields the classes directly.
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> root(n);
  std::iota(root.begin(), root.end(), 0u);
  auto find = [&](Vertex x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (!neighbor_equivalent(g, e.u, e.v)) continue;
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexSet> classes;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = find(v);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = classes.size();
      classes.emplace_back();
    }
    classes[slot[r]].push_back(v);
  }
  return classes;
}

StructureReport analyze(const Graph& g) {
  StructureReport r;
  r.connected = is_connected(g);
  r.articulation_vertices = articulation_vertices(g);
  r.equivalence_classes = equivalence_classes(g);
  return r;
}

Permuted permute(const Graph& g, std::uint64_t seed) {
  auto rng = CounterRng::for_phase(seed, "permute");
  Permuted out;
  out.permutation = random_permutation(g.num_vertices(), rng);
  out.graph = relabel(g, out.permutation);
  return out;
}

VertexSet& normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const VertexSet& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

}  // namespace critgraph
