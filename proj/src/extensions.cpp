#include "critgraph/extensions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "critgraph/criticality.hpp"
#include "critgraph/errors.hpp"

namespace critgraph {

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::seed: return "seed";
    case StepKind::parallel: return "parallel";
    case StepKind::chain: return "chain";
    case StepKind::split: return "split";
  }
  return "?";
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
}

// Splitting and chain extension are only defined for graphs on three or
// more vertices; K1 and K2 are roots for parallel extension only.
void check_splittable(const TrackedGraph& tg) {
  if (tg.graph.num_vertices() < 3) throw InvalidArgument("chain/split need a graph with at least three vertices");
}

TrackedGraph extended(const TrackedGraph& tg, Graph g, Vertex joins_cover, ExtensionStep step) {
  TrackedGraph out{std::move(g), tg.cover, tg.critical, tg.trace};
  out.cover.push_back(joins_cover);
  normalize(out.cover);
  out.trace.push_back(std::move(step));
  return out;
}

}  // namespace

TrackedGraph seed_clique(std::size_t k) {
  if (k == 0) throw InvalidArgument("clique seed needs at least one vertex");
  TrackedGraph tg;
  tg.graph = complete_graph(k);
  for (Vertex v = 0; v + 1 < k; ++v) tg.cover.push_back(v);
  ExtensionStep s;
  s.kind = StepKind::seed;
  s.clique = k;
  tg.trace.push_back(std::move(s));
  return tg;
}

TrackedGraph seed_verified(const Graph& g, const SolveBudget& budget) {
  const auto verdict = is_critical(g, budget);
  if (verdict.status == Criticality::unknown) throw BudgetExhausted("criticality of the seed could not be decided");
  if (verdict.status == Criticality::reducible) throw InvalidArgument("seed graph is not critical");
  const auto r = mvc(g, budget);
  if (!r.exact()) throw BudgetExhausted("seed cover could not be solved exactly");
  TrackedGraph tg;
  tg.graph = g;
  tg.cover = r.cover;
  ExtensionStep s;
  s.kind = StepKind::seed;
  s.seed_graph = g;
  s.cover = r.cover;
  tg.trace.push_back(std::move(s));
  return tg;
}

TrackedGraph parallel_extend(const TrackedGraph& tg, Vertex v) {
  const Graph& g = tg.graph;
  check_vertex(g, v);
  const auto u = static_cast<Vertex>(g.num_vertices());
  std::vector<Edge> edges(g.edges());
  edges.emplace_back(v, u);
  for (Vertex w : g.neighbors(v)) edges.emplace_back(w, u);

  ExtensionStep step;
  step.kind = StepKind::parallel;
  step.v = v;
  step.new_vertices = {u};
  return extended(tg, Graph(g.num_vertices() + 1, edges), u, std::move(step));
}

TrackedGraph chain_extend(const TrackedGraph& tg, Vertex u, Vertex v) {
  const Graph& g = tg.graph;
  check_splittable(tg);
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.has_edge(u, v)) throw InvalidArgument("chain extension needs an existing edge");
  const auto x = static_cast<Vertex>(g.num_vertices());
  const auto y = x + 1;
  const Edge removed(u, v);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() + 2);
  for (const Edge& e : g.edges())
    if (e != removed) edges.push_back(e);
  edges.emplace_back(u, x);
  edges.emplace_back(x, y);
  edges.emplace_back(y, v);

  ExtensionStep step;
  step.kind = StepKind::chain;
  step.u = u;
  step.v = v;
  step.new_vertices = {x, y};
  const Vertex joins = contains(tg.cover, u) ? y : x;
  return extended(tg, Graph(g.num_vertices() + 2, edges), joins, std::move(step));
}

TrackedGraph split_vertex(const TrackedGraph& tg, Vertex u, std::span<const Vertex> F) {
  const Graph& g = tg.graph;
  check_splittable(tg);
  check_vertex(g, u);
  if (g.degree(u) < 2) throw InvalidArgument("split vertex needs degree at least two");
  VertexSet moved(F.begin(), F.end());
  normalize(moved);
  if (moved.empty()) throw InvalidArgument("split set F must be nonempty");
  if (moved.size() != F.size()) throw InvalidArgument("split set F contains duplicates");
  for (Vertex f : moved)
    if (f >= g.num_vertices() || !g.has_edge(u, f)) throw InvalidArgument("split set F must lie in N(u)");
  // With F = N(u) the split vertex would be left pendant.
  if (moved.size() == g.degree(u)) throw InvalidArgument("split set F must be a proper subset of N(u)");

  const auto v = static_cast<Vertex>(g.num_vertices());
  const auto w = v + 1;
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() + 2);
  for (const Edge& e : g.edges()) {
    const bool at_u = e.u == u || e.v == u;
    const Vertex other = e.u == u ? e.v : e.u;
    if (at_u && contains(moved, other)) continue;
    edges.push_back(e);
  }
  edges.emplace_back(u, v);
  edges.emplace_back(v, w);
  for (Vertex f : moved) edges.emplace_back(w, f);

  ExtensionStep step;
  step.kind = StepKind::split;
  step.u = u;
  step.F = moved;
  step.new_vertices = {v, w};
  const Vertex joins = contains(tg.cover, u) ? w : v;
  return extended(tg, Graph(g.num_vertices() + 2, edges), joins, std::move(step));
}

PasteResult paste(const TrackedGraph& tg1, Edge e, const TrackedGraph& tg2, Vertex w,
                  const std::map<Vertex, Vertex>& assignment) {
  const Graph& g1 = tg1.graph;
  const Graph& g2 = tg2.graph;
  if (!g1.has_edge(e)) throw InvalidArgument("paste edge is not in the first graph");
  check_vertex(g2, w);
  if (g2.degree(w) < 2) throw InvalidArgument("paste vertex needs degree at least two");
  if (assignment.size() != g2.degree(w)) throw InvalidArgument("assignment must cover exactly N(w)");
  bool used_u = false, used_v = false;
  for (Vertex x : g2.neighbors(w)) {
    const auto it = assignment.find(x);
    if (it == assignment.end()) throw InvalidArgument("assignment must cover exactly N(w)");
    if (it->second == e.u) used_u = true;
    else if (it->second == e.v) used_v = true;
    else throw InvalidArgument("assignment targets must be endpoints of the paste edge");
  }
  if (!used_u || !used_v) throw InvalidArgument("both endpoints of the paste edge must be used");

  const auto n1 = static_cast<Vertex>(g1.num_vertices());
  auto shift = [&](Vertex x) { return x < w ? n1 + x : n1 + x - 1; };
  std::vector<Edge> edges;
  for (const Edge& f : g1.edges())
    if (f != e) edges.push_back(f);
  for (const Edge& f : g2.edges())
    if (f.u != w && f.v != w) edges.emplace_back(shift(f.u), shift(f.v));
  for (const auto& [x, target] : assignment) edges.emplace_back(shift(x), target);

  PasteResult r;
  r.graph = Graph(g1.num_vertices() + g2.num_vertices() - 1, edges);
  r.cover_size = tg1.cover_size() + tg2.cover_size() - 1;
  return r;
}

namespace {

std::optional<VertexSet> map_cover(const VertexSet& cover, const std::vector<Vertex>& old_to_new) {
  VertexSet out;
  for (Vertex v : cover)
    if (old_to_new[v] != kNoVertex) out.push_back(old_to_new[v]);
  normalize(out);
  return out;
}

}  // namespace

Shrunk shrink_parallel(const Graph& g, Vertex u, Vertex v, const std::optional<VertexSet>& known_cover) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!neighbor_equivalent(g, u, v)) throw InvalidArgument("shrink_parallel needs adjacent neighbour-equivalent vertices");
  if (known_cover && !is_cover(g, *known_cover)) throw InvalidArgument("known cover is not a vertex cover");
  Shrunk s;
  const Vertex gone[1] = {u};
  s.graph = remove_vertices(g, gone, &s.old_to_new);
  if (known_cover) {
    // Without u in the cover all of N(u) is, and then v's edges are covered
    // by its other endpoints, so v can go instead.
    VertexSet c = *known_cover;
    if (!contains(c, u)) c.erase(std::find(c.begin(), c.end(), v));
    s.cover = map_cover(c, s.old_to_new);
  }
  return s;
}

Shrunk shrink_chain(const Graph& g, Vertex x, Vertex y, const std::optional<VertexSet>& known_cover) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (!g.has_edge(x, y)) throw InvalidArgument("shrink_chain needs adjacent vertices");
  if (g.degree(x) != 2 || g.degree(y) != 2) throw InvalidArgument("shrink_chain needs two vertices of degree two");
  const Vertex a = g.neighbors(x)[0] == y ? g.neighbors(x)[1] : g.neighbors(x)[0];
  const Vertex b = g.neighbors(y)[0] == x ? g.neighbors(y)[1] : g.neighbors(y)[0];
  if (a == b) throw InvalidArgument("shrink_chain would create a self-loop");

  if (known_cover && !is_cover(g, *known_cover)) throw InvalidArgument("known cover is not a vertex cover");
  Shrunk s;
  const Vertex gone[2] = {x, y};
  Graph rest = remove_vertices(g, gone, &s.old_to_new);
  const Edge joined(s.old_to_new[a], s.old_to_new[b]);
  s.graph = rest.has_edge(joined) ? std::move(rest) : add_edge(rest, joined);
  if (known_cover) {
    VertexSet c = *known_cover;
    if (!contains(c, a) && !contains(c, b)) c.push_back(a);
    s.cover = map_cover(c, s.old_to_new);
  }
  return s;
}

namespace {

std::string join(std::span<const Vertex> vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::uint64_t parse_number(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw FormatError("trace: bad number '" + std::string(s) + "'");
  return v;
}

std::vector<Vertex> parse_list(std::string_view s) {
  std::vector<Vertex> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(static_cast<Vertex>(parse_number(s.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<Edge> parse_edges(std::string_view s) {
  std::vector<Edge> out;
  for (std::string_view rest = s; !rest.empty();) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw FormatError("trace: bad edge '" + std::string(item) + "'");
    out.emplace_back(static_cast<Vertex>(parse_number(item.substr(0, dash))),
                     static_cast<Vertex>(parse_number(item.substr(dash + 1))));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string serialize_trace(std::span<const ExtensionStep> trace) {
  std::ostringstream out;
  for (const auto& s : trace) {
    out << to_string(s.kind);
    switch (s.kind) {
      case StepKind::seed:
        if (s.seed_graph) {
          out << " graph n=" << s.seed_graph->num_vertices() << " cover=" << join(s.cover) << " edges=";
          const auto& es = s.seed_graph->edges();
          for (std::size_t i = 0; i < es.size(); ++i) out << (i ? "," : "") << es[i].u << '-' << es[i].v;
        } else {
          out << " clique k=" << s.clique;
        }
        break;
      case StepKind::parallel: out << " v=" << s.v << " new=" << join(s.new_vertices); break;
      case StepKind::chain: out << " u=" << s.u << " v=" << s.v << " new=" << join(s.new_vertices); break;
      case StepKind::split: out << " u=" << s.u << " F=" << join(s.F) << " new=" << join(s.new_vertices); break;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ExtensionStep> parse_trace(std::string_view text) {
  std::vector<ExtensionStep> trace;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string kind;
    words >> kind;
    std::map<std::string, std::string> kv;
    std::string word, shape;
    while (words >> word) {
      const auto eq = word.find('=');
      if (eq == std::string::npos) {
        shape = word;
        continue;
      }
      kv[word.substr(0, eq)] = word.substr(eq + 1);
    }
    auto field = [&](const char* key) -> const std::string& {
      const auto it = kv.find(key);
      if (it == kv.end()) throw FormatError("trace: missing field '" + std::string(key) + "' in: " + line);
      return it->second;
    };
    ExtensionStep s;
    if (kind == "seed") {
      s.kind = StepKind::seed;
      if (shape == "clique") {
        s.clique = parse_number(field("k"));
      } else if (shape == "graph") {
        const auto n = parse_number(field("n"));
        s.seed_graph = Graph(n, parse_edges(field("edges")));
        s.cover = parse_list(field("cover"));
      } else {
        throw FormatError("trace: unknown seed kind in: " + line);
      }
    } else if (kind == "parallel") {
      s.kind = StepKind::parallel;
      s.v = static_cast<Vertex>(parse_number(field("v")));
      s.new_vertices = parse_list(field("new"));
    } else if (kind == "chain") {
      s.kind = StepKind::chain;
      s.u = static_cast<Vertex>(parse_number(field("u")));
      s.v = static_cast<Vertex>(parse_number(field("v")));
      s.new_vertices = parse_list(field("new"));
    } else if (kind == "split") {
      s.kind = StepKind::split;
      s.u = static_cast<Vertex>(parse_number(field("u")));
      s.F = parse_list(field("F"));
      s.new_vertices = parse_list(field("new"));
    } else {
      throw FormatError("trace: unknown step '" + kind + "'");
    }
    trace.push_back(std::move(s));
  }
  return trace;
}

TrackedGraph replay(std::span<const ExtensionStep> trace) {
  if (trace.empty() || trace.front().kind != StepKind::seed) throw FormatError("trace must start with a seed");
  const auto& first = trace.front();
  TrackedGraph tg;
  if (first.seed_graph) {
    tg.graph = *first.seed_graph;
    tg.cover = first.cover;
    tg.trace.push_back(first);
    if (!is_cover(tg.graph, tg.cover)) throw FormatError("trace seed cover is not a vertex cover");
  } else {
    tg = seed_clique(first.clique);
  }
  for (const auto& s : trace.subspan(1)) {
    switch (s.kind) {
      case StepKind::seed: throw FormatError("trace contains a second seed");
      case StepKind::parallel: tg = parallel_extend(tg, s.v); break;
      case StepKind::chain: tg = chain_extend(tg, s.u, s.v); break;
      case StepKind::split: tg = split_vertex(tg, s.u, s.F); break;
    }
    if (tg.trace.back().new_vertices != s.new_vertices) throw FormatError("trace new-vertex ids do not match replay");
  }
  return tg;
}

}  // namespace critgraph
