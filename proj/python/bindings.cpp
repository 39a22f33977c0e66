#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "critgraph/alpha.hpp"
#include "critgraph/bench.hpp"
#include "critgraph/circulant.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/dimacs.hpp"
#include "critgraph/errors.hpp"
#include "critgraph/generator.hpp"
#include "critgraph/solver.hpp"

namespace py = pybind11;
using namespace critgraph;

namespace {

SolveBudget make_budget(std::uint64_t max_nodes, std::int64_t time_limit_ms) {
  return {max_nodes, std::chrono::milliseconds{time_limit_ms}};
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Graph from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
  return Graph(n, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact vertex cover, criticality checks and hidden-optimum instance generation";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&from_pairs), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", &edge_list)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v >= g.num_vertices()) throw InvalidArgument("vertex out of range");
        const auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("degree", [](const Graph& g, Vertex v) {
        if (v >= g.num_vertices()) throw InvalidArgument("vertex out of range");
        return g.degree(v);
      })
      .def("has_edge", [](const Graph& g, Vertex a, Vertex b) { return g.has_edge(a, b); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("complete_graph", &complete_graph, py::arg("k"));
  m.def("cycle_graph", &cycle_graph, py::arg("k"));
  m.def("path_graph", &path_graph, py::arg("k"));
  m.def("parse_dimacs", [](const std::string& text) { return dimacs::parse(text); }, py::arg("text"));
  m.def("write_dimacs", [](const Graph& g) { return dimacs::write(g); }, py::arg("graph"));

  m.def(
      "mvc",
      [](const Graph& g, std::uint64_t max_nodes, std::int64_t time_limit_ms) {
        const auto r = mvc(g, make_budget(max_nodes, time_limit_ms));
        py::dict d;
        d["status"] = std::string(to_string(r.status));
        d["size"] = r.size;
        d["cover"] = r.cover;
        d["nodes"] = r.stats.nodes;
        return d;
      },
      py::arg("graph"), py::arg("max_nodes") = SolveBudget{}.max_nodes,
      py::arg("time_limit_ms") = SolveBudget{}.max_time.count());
  m.def("is_cover", [](const Graph& g, const VertexSet& s) { return is_cover(g, s); }, py::arg("graph"),
        py::arg("cover"));
  m.def("greedy_solve", [](const Graph& g) { return greedy_solve(g).cover; }, py::arg("graph"));

  m.def(
      "is_critical",
      [](const Graph& g, std::size_t workers, std::uint64_t max_nodes, std::int64_t time_limit_ms) {
        const auto v = is_critical(g, make_budget(max_nodes, time_limit_ms), workers);
        py::dict d;
        d["verdict"] = std::string(to_string(v.status));
        d["cover_size"] = v.base_cover_size;
        d["witness_edge"] = v.witness_edge ? py::cast(std::make_pair(v.witness_edge->u, v.witness_edge->v)) : py::none();
        d["nodes"] = v.nodes;
        return d;
      },
      py::arg("graph"), py::arg("workers") = 1, py::arg("max_nodes") = SolveBudget{}.max_nodes,
      py::arg("time_limit_ms") = SolveBudget{}.max_time.count());

  m.def("lexmin_alpha", [](std::size_t n, std::size_t c) { return lexmin_alpha(n, c).entries(); }, py::arg("n"),
        py::arg("c"));
  m.def("alpha_edge_lower_bound", [](std::size_t n, std::size_t c) { return alpha_edge_lower_bound(lexmin_alpha(n, c)); },
        py::arg("n"), py::arg("c"));
  m.def("max_edges", &max_edges, py::arg("n"), py::arg("c"));

  m.def("circulant", [](std::size_t n, std::vector<std::size_t> offsets) { return build_circulant({n, std::move(offsets)}); },
        py::arg("n"), py::arg("offsets"));
  m.def("cnd_mvc_size", &cnd_mvc_size, py::arg("n"), py::arg("d_h"));
  m.def("cnd_is_critical", &cnd_is_critical, py::arg("n"), py::arg("d_h"));
  m.def(
      "circulant_search",
      [](int degree, std::size_t n_min, std::size_t n_max, std::size_t offset_min, std::size_t offset_max,
         std::size_t workers) {
        SearchOptions opt;
        opt.degree = degree;
        opt.n_min = n_min;
        opt.n_max = n_max;
        opt.offset_min = offset_min;
        opt.offset_max = offset_max;
        opt.workers = workers;
        return catalog_csv(search_critical(opt));
      },
      py::arg("degree") = 6, py::arg("n_min") = 4, py::arg("n_max") = 60, py::arg("offset_min") = 2,
      py::arg("offset_max") = 20, py::arg("workers") = 1, "Catalog CSV for the requested grid");

  py::class_<InstanceBundle>(m, "InstanceBundle")
      .def_readonly("generator", &InstanceBundle::generator)
      .def_readonly("graph", &InstanceBundle::graph)
      .def_readonly("cover", &InstanceBundle::cover)
      .def_readonly("bound", &InstanceBundle::bound)
      .def_property_readonly("bound_kind", [](const InstanceBundle& b) { return std::string(to_string(b.bound_kind)); })
      .def_property_readonly("cover_is_optimal", &InstanceBundle::cover_is_optimal)
      .def_readonly("n", &InstanceBundle::n)
      .def_readonly("m", &InstanceBundle::m)
      .def_readonly("ell", &InstanceBundle::ell)
      .def_readonly("seed", &InstanceBundle::seed)
      .def_readonly("base_traces", &InstanceBundle::base_traces)
      .def("sidecar_json", &sidecar_json)
      .def("write", [](const InstanceBundle& b, const std::filesystem::path& prefix) { write_bundle(prefix, b); },
           py::arg("prefix"));

  m.def(
      "generate_hard",
      [](std::size_t n, std::optional<std::size_t> edges, std::optional<double> k, std::optional<std::size_t> ell,
         std::uint64_t seed, std::size_t bases) {
        GeneratorConfig cfg;
        cfg.n = n;
        cfg.m = edges;
        cfg.k = k;
        cfg.ell = ell;
        cfg.seed = seed;
        cfg.bases = bases;
        return generate_hard(cfg);
      },
      py::arg("n"), py::arg("m") = py::none(), py::arg("k") = py::none(), py::arg("ell") = py::none(),
      py::arg("seed") = 0, py::arg("bases") = 2);
  m.def("generate_structureless", &generate_structureless, py::arg("n"), py::arg("m"), py::arg("n_c"),
        py::arg("seed") = 0);
  m.def("generate_witzel", &generate_witzel, py::arg("num_cliques"), py::arg("clique_size"), py::arg("m_target"),
        py::arg("seed") = 0);
  m.def("read_bundle", &read_bundle, py::arg("prefix"));
  m.def(
      "verify_bundle",
      [](const InstanceBundle& b, std::size_t exact_limit) {
        const auto r = verify_bundle(b, {}, exact_limit);
        py::dict d;
        d["ok"] = r.ok;
        d["problems"] = r.problems;
        d["minimality"] = std::string(to_string(r.minimality));
        return d;
      },
      py::arg("bundle"), py::arg("exact_limit") = 2000);
}
