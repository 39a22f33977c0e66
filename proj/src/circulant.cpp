#include "critgraph/circulant.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "critgraph/errors.hpp"
#include "critgraph/parallel.hpp"

namespace critgraph {

Graph build_circulant(const CirculantSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 2) throw InvalidArgument("circulant graph needs at least two vertices");
  std::vector<Edge> edges;
  for (std::size_t j : spec.offsets) {
    if (j % n == 0) throw InvalidArgument("offset " + std::to_string(j) + " is a multiple of n");
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + j) % n));
  }
  return Graph(n, edges);
}

Graph cnd_graph(std::size_t n, std::size_t d_h) {
  CirculantSpec spec{n, {}};
  for (std::size_t j = 1; j <= d_h; ++j) spec.offsets.push_back(j);
  return build_circulant(spec);
}

std::size_t cnd_mvc_size(std::size_t n, std::size_t d_h) {
  if (n <= d_h) throw InvalidArgument("cnd_mvc_size needs n > d_h");
  const std::size_t a = n - d_h, b = d_h + 1;
  return n - (a + b - 1) / b;
}

bool cnd_is_critical(std::size_t n, std::size_t d_h) {
  if (d_h < 1 || n <= d_h) throw InvalidArgument("cnd_is_critical needs n > d_h >= 1");
  return n <= 2 * d_h + 1 || (n - d_h) % (d_h + 1) == 0;
}

CriticalityVerdict classify_circulant(const CirculantSpec& spec, const SolveBudget& budget) {
  const Graph g = build_circulant(spec);
  if (!is_connected(g)) throw InvalidArgument("circulant graph is disconnected");
  std::vector<std::size_t> distances;
  for (std::size_t j : spec.offsets) {
    const std::size_t r = j % spec.n;
    distances.push_back(std::min(r, spec.n - r));
  }
  std::sort(distances.begin(), distances.end());
  distances.erase(std::unique(distances.begin(), distances.end()), distances.end());
  std::vector<Edge> representatives;
  for (std::size_t d : distances) representatives.emplace_back(0, static_cast<Vertex>(d));

  const auto base = mvc(g, budget);
  if (!base.exact()) {
    CriticalityVerdict v;
    v.nodes = base.stats.nodes;
    return v;
  }
  auto v = is_critical_on(g, representatives, base.size, budget);
  v.nodes += base.stats.nodes;
  return v;
}

std::vector<SearchRow> search_critical(const SearchOptions& opt) {
  if (opt.degree != 4 && opt.degree != 6) throw InvalidArgument("search degree must be 4 or 6");
  if (opt.n_min > opt.n_max || opt.offset_min > opt.offset_max) throw InvalidArgument("empty search range");
  if (opt.offset_min < 2) throw InvalidArgument("offsets beyond 1 start at 2");

  std::vector<SearchRow> rows;
  for (std::size_t n = std::max<std::size_t>(opt.n_min, 2); n <= opt.n_max; ++n) {
    const std::size_t hi = std::min(opt.offset_max, n - 1);
    for (std::size_t i = opt.offset_min; i <= hi; ++i) {
      if (opt.degree == 4) {
        rows.push_back({n, {i}});
        continue;
      }
      for (std::size_t j = i + 1; j <= hi; ++j) rows.push_back({n, {i, j}});
    }
  }

  const auto verdicts = parallel_map(rows.size(), opt.workers, [&](std::size_t k) {
    CirculantSpec spec{rows[k].n, {1}};
    spec.offsets.insert(spec.offsets.end(), rows[k].offsets.begin(), rows[k].offsets.end());
    return classify_circulant(spec, opt.budget);
  });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CirculantSpec spec{rows[k].n, {1}};
    rows[k].verdict = verdicts[k].status;
    rows[k].cover_size = verdicts[k].base_cover_size;
    rows[k].nodes = verdicts[k].nodes;
    spec.offsets.insert(spec.offsets.end(), rows[k].offsets.begin(), rows[k].offsets.end());
    rows[k].edges = build_circulant(spec).num_edges();
  }
  return rows;
}

std::vector<SearchRow> critical_rows(const std::vector<SearchRow>& rows) {
  std::vector<SearchRow> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [](const SearchRow& r) { return r.verdict == Criticality::critical; });
  return out;
}

void write_catalog_csv(std::ostream& out, const std::vector<SearchRow>& rows) {
  out << "n,offsets,verdict,c,m,nodes\n";
  for (const auto& r : rows) {
    out << r.n << ",1";
    for (std::size_t j : r.offsets) out << ' ' << j;
    out << ',' << to_string(r.verdict) << ',' << r.cover_size << ',' << r.edges << ',' << r.nodes << '\n';
  }
}

std::string catalog_csv(const std::vector<SearchRow>& rows) {
  std::ostringstream out;
  write_catalog_csv(out, rows);
  return out.str();
}

}  // namespace critgraph
