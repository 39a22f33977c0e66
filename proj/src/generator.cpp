#include "critgraph/generator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unordered_set>

#include "critgraph/dimacs.hpp"
#include "critgraph/errors.hpp"

namespace critgraph {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

// First index of the pairs starting at a, in the order (0,1), (0,2), ...
std::uint64_t pair_prefix(std::uint64_t n, std::uint64_t a) { return a * (n - 1) - a * (a - 1) / 2; }

std::uint64_t pool_size(std::uint64_t n, std::uint64_t u) {
  if (n < 2) return 0;
  u = std::min(u, n - 1);
  return pair_prefix(n, u);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path with_suffix(const std::filesystem::path& prefix, std::string_view suffix) {
  return std::filesystem::path(prefix.string() + std::string(suffix));
}

VertexSet map_cover(const VertexSet& cover, const std::vector<Vertex>& perm) {
  VertexSet out;
  out.reserve(cover.size());
  for (Vertex v : cover) out.push_back(perm[v]);
  return normalize(out);
}

}  // namespace

std::size_t default_ell(std::size_t n) {
  if (n < 2) throw InvalidArgument("instances need at least two vertices");
  const std::size_t ell = (n + 1) / 2 + (n + 99) / 100;
  return std::min(ell, n - 1);
}

std::size_t resolve_edges(const GeneratorConfig& cfg) {
  if (cfg.m) return *cfg.m;
  if (!cfg.k) throw InvalidArgument("either m or k must be given");
  if (*cfg.k < 0 || !std::isfinite(*cfg.k)) throw InvalidArgument("k must be a finite non-negative number");
  return static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(cfg.n), *cfg.k)));
}

BaseBudget::BaseBudget(std::size_t n, std::size_t c, std::size_t m) : alpha(lexmin_alpha(n, c)), edges_left(m) {
  if (edges_left < alpha_edge_lower_bound(alpha)) throw InfeasibleError("edge budget below the clique lower bound");
}

bool base_fits(const BaseBudget& budget) {
  const std::size_t n = budget.n_rem(), c = budget.c_rem();
  if (c < 2 || n < 3) return false;
  if (n - c < 2 && !(n == 3 && c == 2)) return false;
  return 3 + alpha_edge_lower_bound(lexmin_alpha(n - 3, c - 2)) <= budget.edges_left;
}

TrackedGraph sample_base_graph(CounterRng& rng, std::size_t target_cover, BaseBudget& budget, StopRule stop) {
  if (target_cover < 2) throw InvalidArgument("base graphs start at K3, cover 2");
  if (!base_fits(budget)) throw InfeasibleError("budget cannot accommodate K3");
  budget.alpha = lexmin_alpha(budget.n_rem() - 3, budget.c_rem() - 2);
  budget.edges_left -= 3;
  TrackedGraph tg = seed_k3();

  const std::size_t near = std::max<std::size_t>(2, target_cover > stop.window ? target_cover - stop.window : 0);
  std::vector<Vertex> sites;
  while (tg.cover_size() < target_cover) {
    sites.clear();
    AlphaVector after_parallel, after_chain;
    if (parallel_fits(budget.alpha)) {
      after_parallel = alpha_after_parallel(budget.alpha);
      const std::size_t reserve = alpha_edge_lower_bound(after_parallel);
      for (Vertex v = 0; v < tg.graph.num_vertices(); ++v)
        if (tg.graph.degree(v) + 1 + reserve <= budget.edges_left) sites.push_back(v);
    }
    bool chain_ok = false;
    if (chain_fits(budget.alpha)) {
      after_chain = alpha_after_chain(budget.alpha);
      chain_ok = 2 + alpha_edge_lower_bound(after_chain) <= budget.edges_left;
    }
    const bool parallel_ok = !sites.empty();
    if (!parallel_ok && !chain_ok) break;

    const bool use_chain = chain_ok && (!parallel_ok || rng.below(2) == 1);
    if (use_chain) {
      const Edge e = tg.graph.edges()[rng.below(tg.graph.num_edges())];
      const bool flip = rng.below(2) == 1;
      tg = flip ? chain_extend(tg, e.v, e.u) : chain_extend(tg, e.u, e.v);
      budget.edges_left -= 2;
      budget.alpha = after_chain;
    } else {
      const Vertex v = sites[rng.below(sites.size())];
      budget.edges_left -= tg.graph.degree(v) + 1;
      tg = parallel_extend(tg, v);
      budget.alpha = after_parallel;
    }
    if (tg.cover_size() >= near && tg.cover_size() < target_cover && rng.unit() < stop.probability) break;
  }
  return tg;
}

Triple assemble_g1(std::span<const TrackedGraph> parts, std::size_t ell, std::size_t m, std::size_t n) {
  std::size_t cover = 0, vertices = 0, edges = 0;
  for (const auto& p : parts) {
    cover += p.cover_size();
    vertices += p.graph.num_vertices();
    edges += p.graph.num_edges();
  }
  if (cover != ell)
    throw InvalidArgument("part covers sum to " + std::to_string(cover) + ", expected " + std::to_string(ell));
  if (vertices > n) throw InvalidArgument("parts use " + std::to_string(vertices) + " vertices, more than n");
  if (edges > m) throw InvalidArgument("parts use " + std::to_string(edges) + " edges, more than m");

  Triple t;
  std::vector<Edge> all;
  all.reserve(edges);
  Vertex offset = 0;
  for (const auto& p : parts) {
    for (const Edge& e : p.graph.edges()) all.emplace_back(e.u + offset, e.v + offset);
    for (Vertex v = 0; v < p.graph.num_vertices(); ++v)
      (contains(p.cover, v) ? t.U : t.V).push_back(v + offset);
    offset += static_cast<Vertex>(p.graph.num_vertices());
  }
  t.graph = Graph(vertices, all);
  return t;
}

Triple pad_vertices_g2(const Triple& t, std::size_t n) {
  const std::size_t have = t.graph.num_vertices();
  if (have > n) throw InvalidArgument("graph already has more than n vertices");
  Triple out{add_vertices(t.graph, n - have), t.U, t.V};
  for (std::size_t v = have; v < n; ++v) out.V.push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<Edge> sample_pairs(std::size_t n, std::size_t u, std::span<const Edge> existing, std::size_t count,
                               CounterRng& rng) {
  const std::uint64_t total = pool_size(n, u);
  const std::uint64_t rows = n < 2 ? 0 : std::min<std::uint64_t>(u, n - 1);

  std::vector<std::uint64_t> taken;
  taken.reserve(existing.size());
  for (const Edge& e : existing) {
    if (e.v >= n || e.u >= rows) throw InvalidArgument("existing edge outside the pair pool");
    taken.push_back(pair_prefix(n, e.u) + (e.v - e.u - 1));
  }
  std::sort(taken.begin(), taken.end());
  if (std::adjacent_find(taken.begin(), taken.end()) != taken.end()) throw InvalidArgument("duplicate existing edge");
  const std::uint64_t free = total - taken.size();
  if (count > free)
    throw InfeasibleError("requested " + std::to_string(count) + " new edges but only " + std::to_string(free) +
                          " pairs are available");

  // Floyd's sampling over the free slots
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(count * 2);
  for (std::uint64_t j = free - count; j < free; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> slots(chosen.begin(), chosen.end());
  std::sort(slots.begin(), slots.end());

  // free slot f is pool index f + #{i : taken[i] - i <= f}
  std::vector<std::uint64_t> shifted(taken.size());
  for (std::size_t i = 0; i < taken.size(); ++i) shifted[i] = taken[i] - i;

  std::vector<Edge> out;
  out.reserve(count);
  for (std::uint64_t f : slots) {
    const std::uint64_t idx = f + static_cast<std::uint64_t>(std::upper_bound(shifted.begin(), shifted.end(), f) -
                                                             shifted.begin());
    std::uint64_t lo = 0, hi = rows - 1;  // largest a with prefix(a) <= idx
    while (lo < hi) {
      const std::uint64_t mid = (lo + hi + 1) / 2;
      if (pair_prefix(n, mid) <= idx) lo = mid;
      else hi = mid - 1;
    }
    const std::uint64_t b = lo + 1 + (idx - pair_prefix(n, lo));
    out.emplace_back(static_cast<Vertex>(lo), static_cast<Vertex>(b));
  }
  return out;
}

Triple fill_edges_g3(const Triple& t, std::size_t m, CounterRng& rng) {
  const std::size_t n = t.graph.num_vertices();
  if (t.U.size() + t.V.size() != n) throw InvalidArgument("U and V must partition the vertices");
  const std::size_t have = t.graph.num_edges();
  if (m < have) throw InvalidArgument("graph already has more than m edges");

  // positions: U first, then V
  std::vector<Vertex> order(t.U);
  order.insert(order.end(), t.V.begin(), t.V.end());
  std::vector<Vertex> position(n, kNoVertex);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != kNoVertex) throw InvalidArgument("U and V must partition the vertices");
    position[order[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> existing;
  existing.reserve(have);
  for (const Edge& e : t.graph.edges()) {
    const Edge p(position[e.u], position[e.v]);
    if (p.u >= t.U.size()) throw InvalidArgument("edge between two vertices outside U");
    existing.push_back(p);
  }
  const auto added = sample_pairs(n, t.U.size(), existing, m - have, rng);

  std::vector<Edge> edges(t.graph.edges());
  edges.reserve(m);
  for (const Edge& p : added) edges.emplace_back(order[p.u], order[p.v]);
  return Triple{Graph(n, edges), t.U, t.V};
}

std::string_view to_string(BoundKind b) {
  switch (b) {
    case BoundKind::optimal: return "optimal";
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
  }
  return "?";
}

BoundKind parse_bound_kind(std::string_view s) {
  if (s == "optimal") return BoundKind::optimal;
  if (s == "upper") return BoundKind::upper;
  if (s == "lower") return BoundKind::lower;
  throw FormatError("unknown bound kind '" + std::string(s) + "'");
}

void check_feasible(std::size_t n, std::size_t ell, std::size_t m) {
  if (ell >= n)
    throw InfeasibleError("cover size " + std::to_string(ell) + " must be below n = " + std::to_string(n));
  const std::size_t lo = alpha_edge_lower_bound(lexmin_alpha(n, ell));
  const std::size_t hi = max_edges(n, ell);
  if (m < lo || m > hi)
    throw InfeasibleError("m = " + std::to_string(m) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] for n = " + std::to_string(n) + ", ell = " + std::to_string(ell));
}

InstanceBundle generate_hard(const GeneratorConfig& cfg) {
  if (cfg.n < 2) throw InvalidArgument("instances need at least two vertices");
  if (!(cfg.stop_probability >= 0.0 && cfg.stop_probability <= 1.0))
    throw InvalidArgument("stop probability must lie in [0, 1]");
  const std::size_t n = cfg.n;
  const std::size_t m = resolve_edges(cfg);
  const std::size_t ell = cfg.ell ? *cfg.ell : default_ell(n);
  check_feasible(n, ell, m);

  const StopRule stop{cfg.stop_probability, cfg.stop_window};
  BaseBudget budget(n, ell, m);
  std::vector<TrackedGraph> parts;
  for (std::size_t i = 0; i < cfg.bases; ++i) {
    const std::size_t target = ell / cfg.bases + (i < ell % cfg.bases ? 1 : 0);
    if (target < 2 || !base_fits(budget)) continue;
    auto rng = CounterRng::for_phase(cfg.seed, "base-" + std::to_string(i + 1));
    parts.push_back(sample_base_graph(rng, target, budget, stop));
  }
  // leftover cover as disjoint cliques; K1 entries become padding
  for (const auto& [size, cnt] : budget.alpha.entries())
    if (size >= 2)
      for (std::size_t j = 0; j < cnt; ++j) parts.push_back(seed_clique(size));

  Triple t = pad_vertices_g2(assemble_g1(parts, ell, m, n), n);
  auto fill_rng = CounterRng::for_phase(cfg.seed, "fill");
  t = fill_edges_g3(t, m, fill_rng);
  auto permuted = permute(t.graph, cfg.seed);

  InstanceBundle b;
  b.generator = "hard";
  b.graph = std::move(permuted.graph);
  b.cover = map_cover(t.U, permuted.permutation);
  b.bound_kind = BoundKind::optimal;
  b.bound = ell;
  b.n = n;
  b.m = m;
  b.k = cfg.m ? std::nullopt : cfg.k;
  b.ell = ell;
  b.seed = cfg.seed;
  b.bases = cfg.bases;
  b.stop = stop;
  b.permutation_seed = cfg.seed;
  b.permutation = std::move(permuted.permutation);
  for (const auto& p : parts) b.base_traces.push_back(serialize_trace(p.trace));
  return b;
}

InstanceBundle generate_structureless(std::size_t n, std::size_t m, std::size_t n_c, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("instances need at least two vertices");
  if (n_c >= n) throw InfeasibleError("n_c must be below n");
  const std::size_t hi = max_edges(n, n_c);
  if (m > hi)
    throw InfeasibleError("m = " + std::to_string(m) + " exceeds the " + std::to_string(hi) + " pairs touching V_C");
  auto rng = CounterRng::for_phase(seed, "structureless");
  const auto edges = sample_pairs(n, n_c, {}, m, rng);
  auto permuted = permute(Graph(n, edges), seed);

  VertexSet vc(n_c);
  for (std::size_t v = 0; v < n_c; ++v) vc[v] = static_cast<Vertex>(v);

  InstanceBundle b;
  b.generator = "structureless";
  b.graph = std::move(permuted.graph);
  b.cover = map_cover(vc, permuted.permutation);
  b.bound_kind = BoundKind::upper;
  b.bound = n_c;
  b.n = n;
  b.m = m;
  b.ell = n_c;
  b.seed = seed;
  b.n_c = n_c;
  b.permutation_seed = seed;
  b.permutation = std::move(permuted.permutation);
  return b;
}

InstanceBundle generate_witzel(std::size_t num_cliques, std::size_t clique_size, std::size_t m_target,
                               std::uint64_t seed) {
  if (num_cliques == 0 || clique_size == 0) throw InvalidArgument("need at least one clique of at least one vertex");
  const std::size_t n = num_cliques * clique_size;
  std::vector<Edge> intra;
  for (std::size_t q = 0; q < num_cliques; ++q) {
    const auto base = static_cast<Vertex>(q * clique_size);
    for (Vertex a = 0; a < clique_size; ++a)
      for (Vertex b = a + 1; b < clique_size; ++b) intra.emplace_back(base + a, base + b);
  }
  if (m_target < intra.size())
    throw InfeasibleError("m_target = " + std::to_string(m_target) + " is below the " + std::to_string(intra.size()) +
                          " clique edges");
  const std::size_t all_pairs = n * (n - 1) / 2;
  if (m_target > all_pairs)
    throw InfeasibleError("m_target = " + std::to_string(m_target) + " exceeds the " + std::to_string(all_pairs) +
                          " vertex pairs");
  auto rng = CounterRng::for_phase(seed, "witzel");
  auto edges = sample_pairs(n, n, intra, m_target - intra.size(), rng);
  edges.insert(edges.end(), intra.begin(), intra.end());
  auto permuted = permute(Graph(n, edges), seed);

  InstanceBundle b;
  b.generator = "witzel";
  b.graph = std::move(permuted.graph);
  b.bound_kind = BoundKind::lower;
  b.bound = num_cliques * (clique_size - 1);
  b.n = n;
  b.m = m_target;
  b.ell = b.bound;
  b.seed = seed;
  b.num_cliques = num_cliques;
  b.clique_size = clique_size;
  b.permutation_seed = seed;
  b.permutation = std::move(permuted.permutation);
  return b;
}

InstanceBundle regenerate(const InstanceBundle& b) {
  if (b.generator == "hard") {
    GeneratorConfig cfg;
    cfg.n = b.n;
    if (b.k) cfg.k = b.k;
    else cfg.m = b.m;
    cfg.ell = b.ell;
    cfg.seed = b.seed;
    cfg.bases = b.bases;
    cfg.stop_probability = b.stop.probability;
    cfg.stop_window = b.stop.window;
    return generate_hard(cfg);
  }
  if (b.generator == "structureless") {
    if (!b.n_c) throw InvalidArgument("structureless bundle without n_c");
    auto out = generate_structureless(b.n, b.m, *b.n_c, b.seed);
    out.k = b.k;
    return out;
  }
  if (b.generator == "witzel") {
    if (!b.num_cliques || !b.clique_size) throw InvalidArgument("witzel bundle without clique parameters");
    return generate_witzel(*b.num_cliques, *b.clique_size, b.m, b.seed);
  }
  throw InvalidArgument("unknown generator '" + b.generator + "'");
}

std::string sidecar_json(const InstanceBundle& b) {
  json params;
  params["n"] = b.n;
  params["m"] = b.m;
  params["k"] = b.k ? json(*b.k) : json(nullptr);
  params["ell"] = b.ell;
  params["seed"] = b.seed;
  params["bases"] = b.bases;
  if (b.generator == "hard") {
    params["stop_probability"] = b.stop.probability;
    params["stop_window"] = b.stop.window;
  }
  if (b.n_c) params["n_c"] = *b.n_c;
  if (b.num_cliques) params["num_cliques"] = *b.num_cliques;
  if (b.clique_size) params["clique_size"] = *b.clique_size;

  json cover = json::array();
  for (Vertex v : b.cover) cover.push_back(v + 1);

  json doc;
  doc["format_version"] = kFormatVersion;
  doc["generator"] = b.generator;
  doc["params"] = std::move(params);
  doc["cover"] = std::move(cover);
  doc["cover_is_optimal"] = b.cover_is_optimal();
  doc["cover_bound"] = {{"kind", std::string(to_string(b.bound_kind))}, {"value", b.bound}};
  doc["permutation_seed"] = b.permutation_seed;
  doc["base_traces"] = b.base_traces;
  return doc.dump(2) + "\n";
}

void write_bundle(const std::filesystem::path& prefix, const InstanceBundle& b) {
  dimacs::write_file(with_suffix(prefix, ".dimacs"), b.graph,
                     "critgraph instance generator=" + b.generator + " seed=" + std::to_string(b.seed));
  std::ofstream out(with_suffix(prefix, ".json"), std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + with_suffix(prefix, ".json").string());
  out << sidecar_json(b);
}

InstanceBundle parse_bundle(std::string_view dimacs_text, std::string_view json_text) {
  InstanceBundle b;
  b.graph = dimacs::parse(dimacs_text);
  try {
    const json doc = json::parse(json_text);
    if (doc.at("format_version").get<int>() != kFormatVersion) throw FormatError("unsupported sidecar format version");
    b.generator = doc.at("generator").get<std::string>();
    if (b.generator != "hard" && b.generator != "structureless" && b.generator != "witzel")
      throw FormatError("unknown generator '" + b.generator + "'");
    const json& p = doc.at("params");
    b.n = p.at("n").get<std::size_t>();
    b.m = p.at("m").get<std::size_t>();
    if (!p.at("k").is_null()) b.k = p.at("k").get<double>();
    b.ell = p.at("ell").get<std::size_t>();
    b.seed = p.at("seed").get<std::uint64_t>();
    b.bases = p.at("bases").get<std::size_t>();
    if (p.contains("stop_probability")) b.stop.probability = p["stop_probability"].get<double>();
    if (p.contains("stop_window")) b.stop.window = p["stop_window"].get<std::size_t>();
    if (p.contains("n_c")) b.n_c = p["n_c"].get<std::size_t>();
    if (p.contains("num_cliques")) b.num_cliques = p["num_cliques"].get<std::size_t>();
    if (p.contains("clique_size")) b.clique_size = p["clique_size"].get<std::size_t>();

    for (const auto& v : doc.at("cover")) {
      const auto id = v.get<std::size_t>();
      if (id == 0 || id > b.graph.num_vertices()) throw FormatError("cover vertex " + std::to_string(id) + " out of range");
      if (!b.cover.empty() && b.cover.back() >= id - 1) throw FormatError("cover list must be strictly increasing");
      b.cover.push_back(static_cast<Vertex>(id - 1));
    }
    const bool optimal = doc.at("cover_is_optimal").get<bool>();
    if (doc.contains("cover_bound")) {
      b.bound_kind = parse_bound_kind(doc["cover_bound"].at("kind").get<std::string>());
      b.bound = doc["cover_bound"].at("value").get<std::size_t>();
    } else {
      b.bound_kind = optimal ? BoundKind::optimal : BoundKind::upper;
      b.bound = b.cover.size();
    }
    if (optimal != b.cover_is_optimal()) throw FormatError("cover_is_optimal contradicts cover_bound");
    b.permutation_seed = doc.at("permutation_seed").get<std::uint64_t>();
    if (doc.contains("base_traces")) b.base_traces = doc["base_traces"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("sidecar: ") + e.what());
  }
  if (b.n != b.graph.num_vertices() || b.m != b.graph.num_edges())
    throw FormatError("sidecar n/m disagree with the DIMACS header");
  return b;
}

InstanceBundle read_bundle(const std::filesystem::path& prefix) {
  return parse_bundle(read_text(with_suffix(prefix, ".dimacs")), read_text(with_suffix(prefix, ".json")));
}

}  // namespace critgraph
