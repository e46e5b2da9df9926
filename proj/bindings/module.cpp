// Python bindings for the main operations. Graphs cross the boundary as a
// small opaque class; certificates cross as JSON strings so the python side
// can inspect them with the standard json module.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "estar/certificates.hpp"
#include "estar/gallery.hpp"
#include "estar/io.hpp"

namespace py = pybind11;
using namespace estar;

namespace {

Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  return build_graph(n, pairs);
}

std::optional<BadnessCertificate> badness_search(const Graph& g) {
  if (auto lab = natural_labeling(g)) {
    auto o = is_bad(g, *lab);
    if (o.certificate) return o.certificate;
  }
  return find_bad_labeling(g);
}

std::string decide_strong_equistarability_json(const Graph& g) {
  auto cert = badness_search(g);
  if (!cert) throw DomainError("graph is not bad; decision unavailable");
  StrongStarDecision d = decide_strong_equistarability(g, cert->labeling);
  return dump_certificate(strong_equistarability_certificate_json(g, cert->labeling, d));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "equistable/equistarable counterexample toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
      .def_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges; })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("build_graph", &graph_from_pairs, py::arg("n"), py::arg("edges"));
  m.def("complement", &complement);
  m.def("line_graph", [](const Graph& g) { return line_graph(g).first; });
  m.def("line_complement", &line_complement);
  m.def("circulant", &circulant, py::arg("n"), py::arg("distances"));
  m.def("gstar", [] { return gstar().first; });
  m.def("is_triangle_free", &is_triangle_free);
  m.def("is_connected", &is_connected);

  m.def("maximal_stable_sets", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const Bitset& s : maximal_stable_sets(g)) out.push_back(s.to_vector());
    return out;
  });
  m.def("strong_cliques", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const Bitset& s : strong_cliques(g)) out.push_back(s.to_vector());
    return out;
  });
  m.def("is_general_partition",
        [](const Graph& g) { return is_general_partition_via_strong_cliques(g); });
  m.def("has_perfect_matching", [](const Graph& g) -> std::optional<std::vector<int>> {
    auto pm = has_perfect_matching(g);
    if (!pm) return std::nullopt;
    return pm->to_vector();
  });
  m.def(
      "is_k_extendable", [](const Graph& g, int k) { return is_k_extendable(g, k); },
      py::arg("g"), py::arg("k"));

  m.def("is_bad", [](const Graph& g) { return badness_search(g).has_value(); });
  m.def("badness_certificate", [](const Graph& g) -> std::optional<std::string> {
    auto cert = badness_search(g);
    if (!cert) return std::nullopt;
    return dump_certificate(badness_certificate_json(g, *cert));
  });
  m.def("decide_strong_equistarability", &decide_strong_equistarability_json,
        "Returns the strong-equistarability certificate as a JSON string.");

  m.def("check_property", [](const Graph& g, const std::string& property) {
    PropertyOutcome out = run_property_check(g, property);
    std::string cert = out.certificate.is_null() ? "" : dump_certificate(out.certificate);
    return py::make_tuple(out.exit_code, out.message, cert);
  });
  m.def("verify_certificate", [](const std::string& json_text) {
    VerifyReport r = verify_certificate(Json::parse(json_text));
    return py::make_tuple(r.ok, r.detail);
  });
  m.def("gallery_names", &gallery_names);
  m.def("gallery", [](const std::string& name) {
    GalleryEntry e = make_gallery_entry(name);
    py::dict files;
    for (const auto& f : e.files) files[py::str(f.filename)] = f.contents;
    return py::make_tuple(e.summary, files);
  });

  m.def("parse_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  });
  m.def("write_edge_list", &write_edge_list);
  m.def("to_dot", &to_dot, py::arg("g"), py::arg("name") = "G");
}
