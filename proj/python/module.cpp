#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvt/canonical.hpp"
#include "cvt/enumerate.hpp"
#include "cvt/merge_split.hpp"
#include "cvt/pipeline.hpp"
#include "cvt/transitivity.hpp"

namespace py = pybind11;
using namespace cvt;

namespace {

std::vector<Permutation> parse_group(const std::vector<std::string>& gens, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(Permutation::from_cycles(g, degree));
  return out;
}

std::vector<Permutation> group_or_aut(const Graph& g, const std::optional<std::vector<std::string>>& gens) {
  return gens ? parse_group(*gens, g.order()) : graph_automorphisms(g).generators;
}

py::dict record_dict(const ClassificationRecord& c) {
  py::dict d;
  d["order"] = c.order;
  d["graph6"] = c.canonical.bytes;
  d["m"] = c.m_full;
  d["is_cayley"] = c.is_cayley;
  d["is_grr"] = c.is_grr;
  d["is_dihedrant"] = c.is_dihedrant;
  d["girth"] = c.girth;
  d["diameter"] = c.diameter;
  d["hamiltonian"] = c.hamiltonian;
  d["aut_order"] = c.aut_order;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cubic vertex-transitive graph census";

  py::register_exception<DegeneratePairError>(m, "DegeneratePairError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("order"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def_property_readonly("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("is_connected", &Graph::is_connected)
      .def("is_regular", &Graph::is_regular)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph(" + graph6_encode(g) + ")"; });

  m.def("ladder", [](int n, bool moebius) { return ladder(n, moebius ? LadderKind::Moebius : LadderKind::Circular); },
        py::arg("n"), py::arg("moebius") = false);
  m.def("truncation", &truncation);
  m.def("petersen", &named::petersen);
  m.def("coxeter", &named::coxeter);
  m.def("complete", &named::complete);

  m.def("canonical_graph6", [](const Graph& g) { return canonical_form(g).bytes; });
  m.def("are_isomorphic", &are_isomorphic);
  m.def("automorphism_group_order", [](const Graph& g) { return graph_automorphisms(g).order; });
  m.def("automorphism_generators", [](const Graph& g) {
    std::vector<std::string> out;
    for (const auto& p : graph_automorphisms(g).generators) out.push_back(p.to_cycles());
    return out;
  });
  m.def("girth", [](const Graph& g) { return girth(g); });
  m.def("diameter", &diameter);
  m.def("hamilton_cycle", &find_hamilton_cycle);

  m.def(
      "is_vertex_transitive",
      [](const Graph& g, std::optional<std::vector<std::string>> group) {
        return is_vertex_transitive(g, group_or_aut(g, group));
      },
      py::arg("graph"), py::arg("group") = py::none());
  m.def(
      "local_action",
      [](const Graph& g, std::optional<std::vector<std::string>> group, int v) {
        return to_string(local_action(g, group_or_aut(g, group), v).type);
      },
      py::arg("graph"), py::arg("group") = py::none(), py::arg("vertex") = 0);
  m.def("classify", [](const Graph& g) { return record_dict(classify(g)); });

  m.def(
      "merge",
      [](const Graph& g, std::optional<std::vector<std::string>> group) {
        const auto r = merge(g, group_or_aut(g, group));
        return py::make_tuple(r.quotient, r.decomposition.cycles);
      },
      py::arg("graph"), py::arg("group") = py::none(),
      "Quotient by the partner matching and its cycle decomposition. The group defaults to Aut(graph).");
  m.def(
      "split",
      [](const Graph& lambda, const std::vector<std::vector<int>>& cycles) {
        return split(lambda, CycleDecomposition{cycles}).graph;
      },
      py::arg("graph"), py::arg("cycles"));

  m.def("oracle_vertex_transitive", [](int n, unsigned workers) {
    std::vector<std::string> out;
    for (const auto& f : oracle_vertex_transitive(n, workers)) out.push_back(f.bytes);
    return out;
  }, py::arg("order"), py::arg("workers") = 1);

  m.def(
      "census",
      [](std::size_t max_order, const std::string& catalog, std::optional<std::size_t> complete_up_to,
         const std::vector<std::string>& quotients, unsigned workers) {
        CensusOptions opt;
        opt.max_order = max_order;
        opt.workers = workers;
        if (!catalog.empty()) opt.catalog = ingest_catalog(catalog, workers).groups;
        opt.catalog_complete_up_to = complete_up_to ? *complete_up_to : (catalog == "builtin:small14" ? 14 : 0);
        for (const auto& q : quotients) opt.quotients.push_back(read_marked_quotient(q));
        CensusRun run;
        {
          py::gil_scoped_release release;
          run = run_census(opt);
        }
        py::list out;
        for (const auto* rec : run.store.records()) {
          auto d = record_dict(rec->classification);
          d["provenance"] = std::vector<std::string>(rec->provenance.begin(), rec->provenance.end());
          d["exhaustive"] = run.store.exhaustive_orders.contains(rec->classification.order);
          out.append(d);
        }
        return out;
      },
      py::arg("max_order"), py::arg("catalog") = "builtin:small14", py::arg("catalog_complete_up_to") = py::none(),
      py::arg("quotients") = std::vector<std::string>{}, py::arg("workers") = 1);
}
