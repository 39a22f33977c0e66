#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "critgraph/criticality.hpp"
#include "critgraph/dimacs.hpp"
#include "critgraph/errors.hpp"
#include "critgraph/generator.hpp"
#include "oracle.hpp"

using namespace critgraph;

namespace {

std::size_t edges_inside(const Graph& g, const VertexSet& cover) {
  std::size_t bad = 0;
  for (const Edge& e : g.edges())
    if (!contains(cover, e.u) && !contains(cover, e.v)) ++bad;
  return bad;
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("critgraph_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GeneratorConfig small_config(std::uint64_t seed) {
  auto rng = CounterRng::for_phase(seed, "small-config");
  GeneratorConfig cfg;
  cfg.n = 8 + rng.below(23);
  cfg.ell = cfg.n / 2 + rng.below(cfg.n / 2);
  const auto lo = alpha_edge_lower_bound(lexmin_alpha(cfg.n, *cfg.ell));
  const auto hi = max_edges(cfg.n, *cfg.ell);
  cfg.m = lo + rng.below(std::min<std::size_t>(hi - lo + 1, 3 * cfg.n));
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("default cover size and edge count") {
  CHECK(default_ell(100) == 51);
  CHECK(default_ell(300) == 153);
  CHECK(default_ell(1500) == 765);
  CHECK(default_ell(30) == 16);
  CHECK(default_ell(2) == 1);
  CHECK(default_ell(3) == 2);
  GeneratorConfig cfg;
  cfg.n = 1500;
  cfg.k = 1.7;
  CHECK(resolve_edges(cfg) == static_cast<std::size_t>(std::llround(std::pow(1500.0, 1.7))));
  cfg.m = 77;
  CHECK(resolve_edges(cfg) == 77);
}

TEST_CASE("infeasible requests report both bounds") {
  GeneratorConfig cfg;
  cfg.n = 10;
  cfg.ell = 9;
  cfg.m = 46;
  try {
    generate_hard(cfg);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("[45, 45]") != std::string::npos);
  }
  cfg.ell = 6;
  cfg.m = 40;
  CHECK_THROWS_AS(generate_hard(cfg), InfeasibleError);
  cfg.m = 2;
  CHECK_THROWS_AS(generate_hard(cfg), InfeasibleError);
  cfg.ell = 10;
  CHECK_THROWS_AS(generate_hard(cfg), InfeasibleError);
}

TEST_CASE("sample_base_graph") {
  BaseBudget plenty(100, 50, 5000);
  auto rng = CounterRng::for_phase(1, "base");
  auto k3 = sample_base_graph(rng, 2, plenty);
  CHECK(k3.graph == complete_graph(3));
  CHECK(plenty.n_rem() == 97);
  CHECK(plenty.c_rem() == 48);
  CHECK(plenty.edges_left == 4997);

  // parallel would need 3 more edges, only a chain fits
  BaseBudget tight(5, 3, 5);
  auto c5 = sample_base_graph(rng, 3, tight);
  CHECK(c5.graph.num_vertices() == 5);
  CHECK(oracle::isomorphic(c5.graph, cycle_graph(5)));
  CHECK(tight.alpha.empty());
  CHECK(tight.edges_left == 0);

  BaseBudget none(4, 3, 100);
  CHECK_FALSE(base_fits(none));
  CHECK_THROWS_AS(sample_base_graph(rng, 3, none), InfeasibleError);
  CHECK_THROWS_AS(sample_base_graph(rng, 1, plenty), InvalidArgument);

  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t target = 2 + rng.below(7);
    const std::size_t n = 3 + rng.below(15), c = std::min<std::size_t>(2 + rng.below(10), n - 1);
    const std::size_t m = alpha_edge_lower_bound(lexmin_alpha(n, c)) + rng.below(40);
    BaseBudget budget(n, c, m);
    if (!base_fits(budget)) continue;
    const auto tg = sample_base_graph(rng, target, budget);
    CAPTURE(trial);
    CHECK(tg.cover_size() <= target);
    CHECK(tg.graph.num_vertices() + budget.n_rem() == n);
    CHECK(tg.cover_size() + budget.c_rem() == c);
    CHECK(tg.graph.num_edges() + budget.edges_left == m);
    CHECK(budget.edges_left >= alpha_edge_lower_bound(budget.alpha));
    CHECK(budget.alpha == lexmin_alpha(budget.n_rem(), budget.c_rem()));
    CHECK(is_cover(tg.graph, tg.cover));
    CHECK(*oracle::min_cover(tg.graph) == tg.cover_size());
    CHECK(oracle::critical(tg.graph));
    CHECK(is_critical(tg.graph).status == Criticality::critical);
  }
}

TEST_CASE("assemble, pad and fill") {
  const std::vector<TrackedGraph> one{seed_k3()};
  auto t1 = assemble_g1(one, 2, 3, 3);
  CHECK(t1.U.size() == 2);
  CHECK(t1.V.size() == 1);
  CHECK(t1.graph.num_edges() == 3);

  const std::vector<TrackedGraph> two{seed_k3(), seed_k3()};
  auto t2 = assemble_g1(two, 4, 6, 6);
  CHECK(t2.U == VertexSet{0, 1, 3, 4});
  CHECK(t2.V == VertexSet{2, 5});
  CHECK(t2.graph.num_edges() == 6);
  CHECK_THROWS_AS(assemble_g1(two, 5, 6, 6), InvalidArgument);
  CHECK_THROWS_AS(assemble_g1(two, 4, 5, 6), InvalidArgument);
  CHECK_THROWS_AS(assemble_g1(two, 4, 6, 5), InvalidArgument);

  auto padded = pad_vertices_g2(assemble_g1(std::vector<TrackedGraph>{seed_k3(), seed_clique(2)}, 3, 4, 5), 8);
  CHECK(padded.graph.num_vertices() == 8);
  CHECK(padded.V == VertexSet{2, 4, 5, 6, 7});
  CHECK(padded.graph.num_edges() == 4);
  CHECK(mvc(padded.graph).size == 3);
  CHECK(pad_vertices_g2(t2, 6).graph == t2.graph);
  CHECK_THROWS_AS(pad_vertices_g2(t2, 5), InvalidArgument);

  auto rng = CounterRng::for_phase(3, "fill");
  CHECK(fill_edges_g3(t2, 6, rng).graph == t2.graph);
  auto filled = fill_edges_g3(t2, 10, rng);
  CHECK(filled.graph.num_edges() == 10);
  CHECK(edges_inside(filled.graph, filled.U) == 0);
  CHECK(is_cover(filled.graph, filled.U));
  CHECK(*oracle::min_cover(filled.graph) == 4);
  for (const Edge& e : t2.graph.edges()) CHECK(filled.graph.has_edge(e));
  // U x (U + V) on 6 vertices with |U| = 4 holds 6 + 8 = 14 pairs
  CHECK(fill_edges_g3(t2, 14, rng).graph.num_edges() == 14);
  CHECK_THROWS_AS(fill_edges_g3(t2, 15, rng), InfeasibleError);
}

TEST_CASE("sample_pairs draws distinct pool pairs") {
  auto rng = CounterRng::for_phase(5, "pairs");
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(12), u = 1 + rng.below(n);
    std::vector<Edge> pool;
    for (Vertex a = 0; a < std::min(u, n - 1); ++a)
      for (Vertex b = a + 1; b < n; ++b) pool.emplace_back(a, b);
    std::vector<Edge> existing;
    for (const Edge& e : pool)
      if (rng.below(3) == 0) existing.push_back(e);
    const std::size_t free = pool.size() - existing.size();
    const std::size_t count = rng.below(free + 1);
    const auto got = sample_pairs(n, u, existing, count, rng);
    CHECK(got.size() == count);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    for (const Edge& e : got) {
      CHECK(std::find(pool.begin(), pool.end(), e) != pool.end());
      CHECK(std::find(existing.begin(), existing.end(), e) == existing.end());
    }
    if (count == free) CHECK(got.size() + existing.size() == pool.size());
  }

  // every free pair is reachable and roughly equally likely
  std::vector<Edge> existing{{0, 2}, {1, 3}};
  std::map<Edge, int> hits;
  for (int draw = 0; draw < 6000; ++draw)
    for (const Edge& e : sample_pairs(5, 2, existing, 1, rng)) ++hits[e];
  CHECK(hits.size() == 5);  // pool of 7 minus 2 existing
  for (const auto& [e, h] : hits) CHECK((h > 1000 && h < 1400));
  CHECK_THROWS_AS(sample_pairs(4, 1, std::vector<Edge>{{1, 2}}, 0, rng), InvalidArgument);
}

TEST_CASE("hard bundles hide a minimum cover") {
  int full_bases = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto cfg = small_config(seed);
    CAPTURE(seed);
    const auto b = generate_hard(cfg);
    REQUIRE(b.graph.num_vertices() == cfg.n);
    REQUIRE(b.graph.num_edges() == *cfg.m);
    CHECK(b.cover.size() == *cfg.ell);
    CHECK(b.cover_is_optimal());
    CHECK(is_cover(b.graph, b.cover));
    CHECK(edges_inside(b.graph, b.cover) == 0);
    const auto r = mvc(b.graph);
    REQUIRE(r.exact());
    CHECK(r.size == *cfg.ell);
    if (cfg.n <= 20) CHECK(*oracle::min_cover(b.graph) == *cfg.ell);

    // every part replays to a critical graph, parts partition the cover
    std::size_t cover = 0, vertices = 0, edges = 0;
    for (const auto& text : b.base_traces) {
      const auto tg = replay(parse_trace(text));
      cover += tg.cover_size();
      vertices += tg.graph.num_vertices();
      edges += tg.graph.num_edges();
      if (tg.trace.size() > 1) ++full_bases;
      CHECK(is_critical(tg.graph).status == Criticality::critical);
    }
    CHECK(cover == *cfg.ell);
    CHECK(vertices <= cfg.n);
    CHECK(edges <= *cfg.m);
    CHECK(alpha_edge_lower_bound(lexmin_alpha(vertices, cover)) <= edges);
  }
  CHECK(full_bases > 50);
}

TEST_CASE("hard bundle with k") {
  GeneratorConfig cfg;
  cfg.n = 30;
  cfg.k = 1.5;
  cfg.seed = 2024;
  const auto b = generate_hard(cfg);
  CHECK(b.m == 164);
  CHECK(b.ell == 16);
  CHECK(b.graph.num_edges() == 164);
  CHECK(mvc(b.graph).size == 16);
  CHECK(mvc_constrained(b.graph, {}, {}, {}, 15).status == SolveStatus::above_cutoff);
}

TEST_CASE("generation is deterministic and replayable") {
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    auto cfg = small_config(seed);
    const auto a = generate_hard(cfg), b = generate_hard(cfg);
    CHECK(a.graph == b.graph);
    CHECK(sidecar_json(a) == sidecar_json(b));
    CHECK(dimacs::write(a.graph) == dimacs::write(b.graph));
    const auto again = regenerate(a);
    CHECK(sidecar_json(again) == sidecar_json(a));
    CHECK(again.graph == a.graph);
    cfg.seed += 1000;
    CHECK(generate_hard(cfg).graph != a.graph);
  }
  const auto s = generate_structureless(30, 90, 14, 5);
  CHECK(regenerate(s).graph == s.graph);
  const auto w = generate_witzel(3, 4, 30, 5);
  CHECK(regenerate(w).graph == w.graph);
}

TEST_CASE("bundle files round trip") {
  const auto dir = scratch_dir("bundle");
  GeneratorConfig cfg;
  cfg.n = 40;
  cfg.k = 1.6;
  cfg.seed = 11;
  const auto b = generate_hard(cfg);
  write_bundle(dir / "inst", b);
  const auto dimacs_text = slurp(dir / "inst.dimacs");
  const auto json_text = slurp(dir / "inst.json");
  CHECK(dimacs_text.find("cover") == std::string::npos);
  CHECK(json_text.find("\"cover_is_optimal\": true") != std::string::npos);

  const auto r = read_bundle(dir / "inst");
  CHECK(r.graph == b.graph);
  CHECK(r.cover == b.cover);
  CHECK(r.k == b.k);
  CHECK(sidecar_json(r) == json_text);
  write_bundle(dir / "copy", r);
  CHECK(slurp(dir / "copy.dimacs") == dimacs_text);

  CHECK_THROWS_AS(parse_bundle(dimacs_text, "{"), FormatError);
  CHECK_THROWS_AS(parse_bundle(dimacs_text, "{\"format_version\": 1}"), FormatError);
  CHECK_THROWS_AS(parse_bundle("p edge 2 1\ne 1 2\n", json_text), FormatError);
  CHECK_THROWS_AS(read_bundle(dir / "missing"), FormatError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("structureless generator") {
  const auto b = generate_structureless(20, 40, 12, 3);
  CHECK(b.graph.num_edges() == 40);
  CHECK(b.cover.size() == 12);
  CHECK(b.bound_kind == BoundKind::upper);
  CHECK_FALSE(b.cover_is_optimal());
  CHECK(edges_inside(b.graph, b.cover) == 0);
  CHECK(mvc(b.graph).size <= 12);

  auto rng = CounterRng::for_phase(9, "structureless-sizes");
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + rng.below(15), nc = 1 + rng.below(n - 1);
    const std::size_t m = rng.below(max_edges(n, nc) + 1);
    const auto s = generate_structureless(n, m, nc, trial);
    CHECK(*oracle::min_cover(s.graph) <= nc);
    CHECK(is_cover(s.graph, s.cover));
  }
  CHECK_THROWS_AS(generate_structureless(10, 40, 3, 1), InfeasibleError);  // 3 + 21 = 24 pairs
  CHECK_THROWS_AS(generate_structureless(10, 5, 10, 1), InfeasibleError);
}

TEST_CASE("witzel generator") {
  const auto b = generate_witzel(2, 3, 7, 1);
  CHECK(b.graph.num_vertices() == 6);
  CHECK(b.graph.num_edges() == 7);
  CHECK(b.bound == 4);
  CHECK(b.bound_kind == BoundKind::lower);
  CHECK(b.cover.empty());
  std::size_t triangles = 0;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex c = a + 1; c < 6; ++c)
      for (Vertex d = c + 1; d < 6; ++d)
        if (b.graph.has_edge(a, c) && b.graph.has_edge(c, d) && b.graph.has_edge(a, d)) ++triangles;
  CHECK(triangles == 2);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto w = generate_witzel(3, 4, 18 + seed % 10, seed);
    CHECK(*oracle::min_cover(w.graph) >= 9);
  }
  CHECK_THROWS_AS(generate_witzel(2, 3, 5, 1), InfeasibleError);
  CHECK_THROWS_AS(generate_witzel(2, 3, 16, 1), InfeasibleError);
}
