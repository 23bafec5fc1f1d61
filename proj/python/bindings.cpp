// Python extension cayley._core. Structured results cross the boundary as
// JSON text and are decoded by the pure-Python package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley/constructions.hpp"
#include "cayley/io.hpp"
#include "cayley/kloosterman.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

std::string dump(const io::json& doc) { return doc.dump(); }

CayleyGraph make_graph(std::vector<int64_t> factors,
                       const std::vector<std::vector<int64_t>>& elements) {
  std::vector<GroupElement> elems;
  for (const auto& e : elements) elems.emplace_back(e);
  return CayleyGraph::build(AbelianGroup(std::move(factors)), std::move(elems));
}

std::string analyze(const CayleyGraph& graph, unsigned jobs) {
  const auto stats = graph_stats(graph);
  const auto spectrum = spectrum_by_characters(graph, jobs);
  io::json doc;
  doc["graph"] = io::graph_to_json(graph);
  doc["stats"] = io::stats_to_json(stats);
  doc["spectrum"] = io::spectrum_to_json(spectrum);
  doc["verdict"] = io::verdict_to_json(ramanujan_check(spectrum, graph.degree(), stats));
  doc["spectral_gap"] = spectral_gap(spectrum, graph.degree());
  doc["srg"] = io::srg_to_json(srg_check(graph));
  const auto cert = verify_gds(graph.group(), graph.connection().elements());
  doc["gds"] = cert ? io::certificate_to_json(*cert) : io::json(nullptr);
  return dump(doc);
}

std::string construct(ConstructionReport report, unsigned jobs) {
  const auto cert = certify(report, jobs);
  io::json doc;
  doc["report"] = io::report_to_json(report);
  doc["graph"] = io::graph_to_json(CayleyGraph(report.connection));
  doc["stats"] = io::stats_to_json(cert.stats);
  doc["spectrum"] = io::spectrum_to_json(cert.spectrum);
  doc["verdict"] = io::verdict_to_json(cert.verdict);
  return dump(doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cayley graph spectra and Ramanujan certification";

  // InvalidArgument derives from std::invalid_argument and surfaces as ValueError.
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_ValueError);

  py::class_<CayleyGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("factors"), py::arg("connection_set"))
      .def_property_readonly("vertex_count", &CayleyGraph::vertex_count)
      .def_property_readonly("degree", &CayleyGraph::degree)
      .def("neighbors", &CayleyGraph::neighbors, py::arg("u"))
      .def("to_json", [](const CayleyGraph& g) { return dump(io::graph_to_json(g)); })
      .def("to_dot", &io::to_dot);

  m.def("analyze_json", &analyze, py::arg("graph"), py::arg("jobs") = 1);
  m.def("spectrum_json",
        [](const CayleyGraph& g, bool oracle) {
          return dump(io::spectrum_to_json(oracle ? spectrum_oracle(g)
                                                  : spectrum_by_characters(g)));
        },
        py::arg("graph"), py::arg("oracle") = false);

  m.def("theorem33_json",
        [](int64_t s, int64_t r, unsigned jobs) { return construct(theorem33_set(s, r), jobs); },
        py::arg("s"), py::arg("r"), py::arg("jobs") = 1);
  m.def("kloosterman_trace_json",
        [](int mm, unsigned jobs) { return construct(kloosterman_trace_set(mm), jobs); },
        py::arg("m"), py::arg("jobs") = 1);
  m.def("polar_trace_json",
        [](int mm, unsigned jobs) { return construct(polar_trace_set(mm), jobs); },
        py::arg("m"), py::arg("jobs") = 1);
  m.def("bent_hadamard_json",
        [](int u, unsigned jobs) { return construct(bent_hadamard_set(u), jobs); },
        py::arg("u"), py::arg("jobs") = 1);

  m.def("kloosterman",
        [](int mm, uint32_t a) { return kloosterman(Gf2Field(mm), Gf2Element{a}); },
        py::arg("m"), py::arg("a"));
  m.def("kloosterman_one_recursive", &kloosterman_one_recursive, py::arg("m"));
  m.def("kloosterman_one_carlitz", &kloosterman_one_carlitz, py::arg("m"));

  m.def("search_ramanujan_json",
        [](int64_t n, int64_t min_degree, unsigned jobs) {
          std::string out;
          search_ramanujan_circulant(
              n, [&](const SearchHit& hit) { out += dump(io::search_hit_to_json(hit)) + "\n"; },
              {min_degree, jobs});
          return out;
        },
        py::arg("n"), py::arg("min_degree") = 2, py::arg("jobs") = 1);
  m.def("search_gds_json",
        [](int n, bool canonical) {
          std::string out;
          search_gds(
              n, [&](const GdsSearchHit& hit) { out += dump(io::gds_hit_to_json(hit)) + "\n"; },
              {canonical});
          return out;
        },
        py::arg("n"), py::arg("canonical") = false);
}
