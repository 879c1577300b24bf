#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trivalent/canonical.hpp"
#include "trivalent/catalog.hpp"
#include "trivalent/generator.hpp"
#include "trivalent/graph.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace trivalent;

namespace {

TrivalentGraph graph_from_python(std::vector<Color> colors,
                                 const std::vector<std::tuple<VertexId, VertexId, int>>& edges) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& [u, v, w] : edges) converted.push_back({u, v, EdgeWeight::from_int(w)});
  return TrivalentGraph(std::move(colors), converted);
}

std::vector<std::tuple<VertexId, VertexId, int>> edges_to_python(const TrivalentGraph& g) {
  std::vector<std::tuple<VertexId, VertexId, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.weight.value());
  return out;
}

py::dict counts_to_dict(const CountTable& table) {
  py::dict d;
  for (const auto& [n, count] : table) d[py::int_(n)] = count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Canonical forms and exhaustive enumeration of trivalent 2-stratifold graphs";

  py::enum_<Color>(m, "Color").value("White", Color::White).value("Black", Color::Black);

  py::class_<TrivalentGraph>(m, "TrivalentGraph")
      .def(py::init(&graph_from_python), py::arg("colors"), py::arg("edges"),
           "Build from a color list and (u, v, weight) edges.")
      .def("__len__", &TrivalentGraph::size)
      .def("color", &TrivalentGraph::color)
      .def("degree", &TrivalentGraph::degree)
      .def_property_readonly("colors", &TrivalentGraph::colors)
      .def_property_readonly("edges", &edges_to_python)
      .def_property_readonly("root", &TrivalentGraph::root)
      .def("white_vertices", &TrivalentGraph::white_vertices)
      .def("leaves", &TrivalentGraph::leaves)
      .def("rooted_at", &TrivalentGraph::rooted_at)
      .def(py::self == py::self)
      .def("__repr__", [](const TrivalentGraph& g) {
        std::ostringstream os;
        os << "<TrivalentGraph |V|=" << g.size() << " canon=";
        try {
          os << encode(g).str();
        } catch (const std::exception&) {
          os << "?";
        }
        os << '>';
        return os.str();
      });

  m.def("b12", &b12);
  m.def("b111", &b111);
  m.def("validate", [](const TrivalentGraph& g) {
    std::vector<std::string> kinds;
    for (const auto& v : validate(g)) kinds.push_back(to_string(v.kind));
    return kinds;
  }, "Names of the violated invariants (empty when valid).");
  m.def("census", [](const TrivalentGraph& g) {
    const Census c = census(g);
    return std::make_tuple(c.whites, c.blacks, c.leaves);
  });
  m.def("relabel", [](const TrivalentGraph& g, const std::vector<VertexId>& perm) { return relabel(g, perm); });
  m.def("is_isomorphic_bruteforce", &is_isomorphic_bruteforce, py::arg("g"), py::arg("h"),
        py::arg("vertex_limit") = kDefaultOracleVertexLimit);

  m.def("eccentricity", &eccentricity);
  m.def("farthest_path", &farthest_path);
  m.def("center", &center);
  m.def("ahu_modified", &ahu_modified);
  m.def("encode", [](const TrivalentGraph& g) { return encode(g).str(); });
  m.def("decode", [](const std::string& s) { return decode(s); });
  m.def("symmetry_classes", [](const TrivalentGraph& g) { return symmetry_classes(g).blocks; });

  m.def("apply_o1", &apply_o1);
  m.def("apply_o2", &apply_o2);
  m.def("apply_o1_star", &apply_o1_star);
  m.def("inverse_witness", [](const TrivalentGraph& g) {
    Witness w = inverse_witness(g);
    return py::make_tuple(to_string(w.op), w.precursors, w.anchors);
  });

  py::class_<EnumerationResult>(m, "EnumerationResult")
      .def_property_readonly("mode", [](const EnumerationResult& r) { return to_string(r.mode); })
      .def_readonly("max_white", &EnumerationResult::max_white)
      .def_property_readonly("distinct_counts", [](const EnumerationResult& r) { return counts_to_dict(r.distinct_counts); })
      .def_property_readonly("created_counts", [](const EnumerationResult& r) { return counts_to_dict(r.created_counts); })
      .def("canonical_strings", [](const EnumerationResult& r, std::size_t n) {
        std::vector<std::string> out;
        for (const GraphRecord& rec : r.store.group(n)) out.push_back(rec.canon.str());
        return out;
      })
      .def("graphs", [](const EnumerationResult& r, std::size_t n) {
        std::vector<TrivalentGraph> out;
        for (const GraphRecord& rec : r.store.group(n)) out.push_back(rec.graph);
        return out;
      })
      .def("catalog", [](const EnumerationResult& r) {
        std::ostringstream os;
        write_catalog(r, os);
        return os.str();
      })
      .def("stats_table", [](const EnumerationResult& r) { return stats_table(r); });

  m.def("enumerate", [](std::size_t max_white, const std::string& mode, bool exempt_seed_stage, unsigned threads) {
    EnumerationOptions options;
    options.mode = parse_mode(mode);
    options.exempt_seed_stage = exempt_seed_stage;
    options.threads = threads;
    py::gil_scoped_release release;
    return enumerate(max_white, options);
  }, py::arg("max_white"), py::arg("mode") = "naive", py::arg("exempt_seed_stage") = true, py::arg("threads") = 1);

  m.def("read_catalog", [](const std::string& text, const std::string& mode) {
    std::istringstream in(text);
    return read_catalog(in, parse_mode(mode));
  }, py::arg("text"), py::arg("mode") = "naive");

  m.def("make_tag", [](const TrivalentGraph& g, std::size_t id) {
    const Tag t = make_tag(g, id);
    return std::vector<std::size_t>{t.white_count, t.black_count, t.leaf_count,
                                    t.shortest_leaf_path, t.largest_leaf_path, t.id};
  });
  m.def("to_dot", &to_dot, py::arg("g"), py::arg("name") = "G");

  py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<OracleSizeError>(m, "OracleSizeError", PyExc_RuntimeError);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
