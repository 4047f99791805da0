#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hullmorse/error.hpp"
#include "hullmorse/homology.hpp"
#include "hullmorse/hull.hpp"
#include "hullmorse/io.hpp"
#include "hullmorse/morse.hpp"
#include "hullmorse/polytope.hpp"
#include "hullmorse/theorem.hpp"

namespace py = pybind11;
using namespace hullmorse;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph to_graph(int n, const EdgeList& edges) {
  require(n >= 0 && n <= kMaxVertices, ErrorKind::kInvalidInput, "vertex count out of range");
  Graph g(n);
  for (auto [u, v] : edges) {
    require(0 <= u && u < n && 0 <= v && v < n && u != v, ErrorKind::kInvalidInput,
            "bad edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

EdgeList to_edges(const EdgeIndex& index, EdgeSet s) {
  EdgeList out;
  for (const Edge& e : index.edges_of(s)) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<Field> fields(const std::string& name) {
  if (name == "both") return {Field::kRationals, Field::kTwo};
  return {parse_field(name)};
}

}  // namespace

PYBIND11_MODULE(_hullmorse, m) {
  m.doc() = "Hull resolutions of edge ideals and discrete Morse matchings";

  static py::exception<Error> error(m, "HullMorseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("parse_graph6", [](const std::string& s) {
    const Graph g = parse_graph6(s);
    EdgeList out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return py::make_tuple(g.universe(), out);
  }, "graph6 string -> (n, edges)");

  m.def("complement", [](int n, const EdgeList& edges) {
    EdgeList out;
    for (const Edge& e : complement(to_graph(n, edges)).edges()) out.emplace_back(e.u, e.v);
    return out;
  }, py::arg("n"), py::arg("edges"));

  m.def("facets", [](int n, const EdgeList& edges) {
    const Graph g = to_graph(n, edges);
    const EdgeIndex index(g);
    std::vector<EdgeList> out;
    for (const Face& f : facets_connected(g)) out.push_back(to_edges(index, f.gens));
    return out;
  }, py::arg("n"), py::arg("edges"), "facets of P_G, each as its list of generator edges");

  m.def("face_count", [](int n, const EdgeList& edges) { return face_lattice(to_graph(n, edges)).size(); },
        py::arg("n"), py::arg("edges"), "number of faces of P_G including the empty face");

  m.def("mg_size", [](int n, const EdgeList& edges) { return mg(hull_complex(to_graph(n, edges), true)).size(); },
        py::arg("n"), py::arg("edges"));

  m.def("betti_totals", [](int n, const EdgeList& edges, const std::string& field) {
    return hochster_betti(to_graph(n, edges), parse_field(field)).totals();
  }, py::arg("n"), py::arg("edges"), py::arg("field") = "q");

  m.def("betti_oracles_agree", [](int n, const EdgeList& edges, const std::string& field) {
    const Graph g = to_graph(n, edges);
    const Field f = parse_field(field);
    return hochster_betti(g, f) == koszul_betti(g, f);
  }, py::arg("n"), py::arg("edges"), py::arg("field") = "q");

  m.def("two_disjoint_induced_cycles", [](int n, const EdgeList& edges) -> py::object {
    const auto w = two_disjoint_induced_cycles(to_graph(n, edges));
    if (!w) return py::none();
    return py::cast(members(*w));
  }, py::arg("n"), py::arg("edges"));

  m.def("verify_json", [](int n, const EdgeList& edges, const std::string& field) {
    const GraphVerdict v = verify_theorem(to_graph(n, edges), fields(field));
    return verdict_to_json(v, false);
  }, py::arg("n"), py::arg("edges"), py::arg("field") = "q", py::call_guard<py::gil_scoped_release>());

  m.def("corpus_json", [](int n_max, const std::string& field, bool all) {
    CorpusOptions opt;
    opt.n_max = n_max;
    opt.fields = fields(field);
    opt.all = all;
    opt.workers = 1;
    return report_to_json(run_corpus(opt));
  }, py::arg("n_max"), py::arg("field") = "q", py::arg("all") = false, py::call_guard<py::gil_scoped_release>());
}
