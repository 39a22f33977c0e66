#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "critgraph/dimacs.hpp"
#include "critgraph/errors.hpp"
#include "critgraph/graph.hpp"
#include "oracle.hpp"

using namespace critgraph;

namespace {

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::size_t> class_sizes(const Graph& g) {
  std::vector<std::size_t> s;
  for (const auto& c : equivalence_classes(g)) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

Graph two_triangles_sharing_vertex() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

}  // namespace

TEST_CASE("build_graph normalizes input") {
  const std::vector<Edge> k3{{0, 1}, {1, 2}, {0, 2}};
  auto g = build_graph(3, k3);
  CHECK(g.num_edges() == 3);
  CHECK(g == complete_graph(3));

  const std::vector<Edge> dup{{0, 1}, {1, 0}, {2, 3}};
  CHECK(build_graph(4, dup).num_edges() == 2);

  const std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(build_graph(2, loop), InvalidArgument);
  const std::vector<Edge> range{{0, 5}};
  CHECK_THROWS_AS(build_graph(3, range), InvalidArgument);
}

TEST_CASE("degree sum equals twice the edge count") {
  auto rng = CounterRng::for_phase(7, "degree-sum");
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracle::random_graph(1 + rng.below(20), 0.3, rng);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) CHECK(g.has_edge(w, v));
    }
    CHECK(sum == 2 * g.num_edges());
  }
}

TEST_CASE("delete_edge") {
  auto p = delete_edge(complete_graph(3), Edge(0, 1));
  CHECK(p.num_edges() == 2);
  CHECK(p == Graph(3, {{0, 2}, {1, 2}}));

  // odd cycle minus an edge is a path on the same vertices
  auto c5 = cycle_graph(5);
  auto chain = delete_edge(c5, Edge(4, 0));
  CHECK(chain == path_graph(5));

  auto single = delete_edge(Graph(2, {{0, 1}}), Edge(0, 1));
  CHECK(single.num_vertices() == 2);
  CHECK(single.num_edges() == 0);

  CHECK_THROWS_AS(delete_edge(path_graph(3), Edge(0, 2)), InvalidArgument);
}

TEST_CASE("delete then re-add restores the graph") {
  auto rng = CounterRng::for_phase(11, "readd");
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(8, 0.4, rng);
    for (const Edge& e : g.edges()) CHECK(add_edge(delete_edge(g, e), e) == g);
  }
}

TEST_CASE("analyze: cliques, cycles, paths") {
  auto k5 = analyze(complete_graph(5));
  CHECK(k5.connected);
  CHECK(k5.articulation_vertices.empty());
  CHECK(k5.equivalence_classes.size() == 1);

  auto c5 = analyze(cycle_graph(5));
  CHECK(c5.equivalence_classes.size() == 5);
  for (std::size_t len = 4; len <= 12; ++len) CHECK(equivalence_classes(cycle_graph(len)).size() == len);

  auto p3 = analyze(path_graph(3));
  CHECK(p3.articulation_vertices == VertexSet{1});

  auto bowtie = analyze(two_triangles_sharing_vertex());
  CHECK(bowtie.articulation_vertices == VertexSet{2});

  auto split = analyze(Graph(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(split.connected);
}

TEST_CASE("equivalence classes form a partition") {
  auto rng = CounterRng::for_phase(3, "partition");
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(2 + rng.below(12), 0.5, rng);
    std::vector<int> seen(g.num_vertices(), 0);
    for (const auto& cls : equivalence_classes(g))
      for (Vertex v : cls) ++seen[v];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("listed articulation vertices disconnect the graph") {
  auto rng = CounterRng::for_phase(5, "articulation");
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(3 + rng.below(10), 0.3, rng);
    if (!is_connected(g)) continue;
    auto cut = articulation_vertices(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const VertexSet one{v};
      const bool disconnects = !is_connected(remove_vertices(g, one));
      CHECK(disconnects == contains(cut, v));
    }
  }
}

TEST_CASE("permute") {
  auto k4 = complete_graph(4);
  auto [pk4, perm] = permute(k4, 99);
  CHECK(degree_sequence(pk4) == degree_sequence(k4));
  CHECK(pk4.num_edges() == k4.num_edges());

  std::vector<Vertex> identity{0, 1, 2, 3, 4};
  auto c5 = cycle_graph(5);
  CHECK(relabel(c5, identity) == c5);

  auto a = permute(two_triangles_sharing_vertex(), 1234);
  auto b = permute(two_triangles_sharing_vertex(), 1234);
  CHECK(a.graph == b.graph);
  CHECK(a.permutation == b.permutation);
}

TEST_CASE("structure is invariant under permutation") {
  auto rng = CounterRng::for_phase(17, "perm-invariance");
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = oracle::random_graph(2 + rng.below(12), 0.35, rng);
    auto p = permute(g, seed);
    CHECK(is_connected(p.graph) == is_connected(g));
    CHECK(class_sizes(p.graph) == class_sizes(g));
    CHECK(articulation_vertices(p.graph).size() == articulation_vertices(g).size());
    for (const Edge& e : g.edges()) CHECK(p.graph.has_edge(p.permutation[e.u], p.permutation[e.v]));
  }
}

TEST_CASE("dimacs format") {
  CHECK(dimacs::write(complete_graph(3)) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");

  auto g = dimacs::parse("c a comment\np edge 2 1\ne 1 2");
  CHECK(g == Graph(2, {{0, 1}}));

  CHECK_THROWS_AS(dimacs::parse("p edge 3 2\ne 1 2\n"), FormatError);
  CHECK_THROWS_AS(dimacs::parse("p edge 3\ne 1 2\n"), FormatError);
  CHECK_THROWS_AS(dimacs::parse("p edge 3 1\ne 1 4\n"), FormatError);
  CHECK_THROWS_AS(dimacs::parse("e 1 2\n"), FormatError);
  CHECK_THROWS_AS(dimacs::parse("p edge 3 1\ne 0 1\n"), FormatError);
}

TEST_CASE("dimacs round trip") {
  auto rng = CounterRng::for_phase(23, "dimacs");
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(1 + rng.below(30), 0.2, rng);
    std::stringstream ss;
    dimacs::write(ss, g, "round trip\nsecond line");
    CHECK(dimacs::read(ss) == g);
  }
}
