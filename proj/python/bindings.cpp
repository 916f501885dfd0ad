#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdg/classifier.hpp"
#include "cdg/degree_graphs.hpp"
#include "cdg/descriptor_io.hpp"
#include "cdg/group_engine.hpp"

namespace py = pybind11;
using namespace cdg;

namespace {

PrimeGraph graph_by_family(const std::string& family, u64 t, unsigned a) {
    if (family == "psl2") return psl2_graph(t, a);
    if (family == "sl2") return psl2_graph(t, a);
    if (family == "sz") return sz_graph(a);
    if (family == "m11") return sporadic_graph(Sporadic::M11);
    if (family == "j1") return sporadic_graph(Sporadic::J1);
    if (family == "psl3_4") return sporadic_graph(Sporadic::PSL3_4);
    throw std::invalid_argument("unknown family: " + family);
}

py::dict verdict_to_dict(const Verdict& v) {
    py::dict d;
    d["outcome"] = outcome_name(v.outcome);
    d["clause"] = v.matched_clause;
    d["cut_vertex"] = v.cut_vertex ? py::cast(*v.cut_vertex) : py::none();
    if (v.predicted_graph) {
        d["graph"] = *v.predicted_graph;
    } else {
        d["graph"] = py::none();
    }
    py::list viols;
    for (const Violation& viol : v.violations) {
        viols.append(py::make_tuple(viol.clause, viol.condition));
    }
    d["violations"] = viols;
    d["notes"] = v.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_cdg, m) {
    m.doc() = "character degree graph toolkit";

    py::class_<PrimeGraph>(m, "PrimeGraph")
        .def(py::init<>())
        .def("add_vertex", &PrimeGraph::add_vertex)
        .def("add_edge", &PrimeGraph::add_edge)
        .def("vertices", &PrimeGraph::vertices)
        .def("edges", &PrimeGraph::edges)
        .def("adjacent", &PrimeGraph::adjacent)
        .def("components", &PrimeGraph::components)
        .def("cut_vertices", &PrimeGraph::cut_vertices)
        .def("connectivity_degree", &PrimeGraph::connectivity_degree)
        .def("complete_vertices", &PrimeGraph::complete_vertices)
        .def("is_complete_vertex", &PrimeGraph::is_complete_vertex)
        .def("canonical_text", &PrimeGraph::canonical_text)
        .def("to_dot", &PrimeGraph::to_dot, py::arg("name") = "g")
        .def("__eq__", [](const PrimeGraph& a, const PrimeGraph& b) { return a == b; })
        .def("__repr__", [](const PrimeGraph& g) {
            return "PrimeGraph(" + std::to_string(g.vertices().size()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    m.def("family_graph", &graph_by_family, py::arg("family"), py::arg("t") = 0,
          py::arg("a") = 0,
          "Degree graph for a named family: psl2/sl2 (t, a), sz (a), m11, j1, psl3_4.");
    m.def(
        "graph_from_degrees",
        [](const std::vector<u64>& degrees) {
            DegreeSet d;
            d.degrees.insert(degrees.begin(), degrees.end());
            return graph_from_degrees(d);
        },
        py::arg("degrees"), "Degree graph of an explicit character degree set.");
    m.def(
        "classify",
        [](const std::string& descriptor_text) {
            return verdict_to_dict(classify(parse_descriptor_text(descriptor_text)));
        },
        py::arg("descriptor_text"),
        "Classify a group descriptor (key: value lines) against the clause tables.");
    m.def(
        "zsygmondy",
        [](u64 a, unsigned n) -> py::object {
            auto z = zsygmondy(a, n);
            if (!z) return py::none();
            return py::cast(static_cast<u64>(*z));
        },
        py::arg("a"), py::arg("n"),
        "Smallest primitive prime divisor of a^n - 1, or None in the exceptional cases.");
    m.def(
        "check_nq",
        [](u64 t, unsigned a, u64 q) {
            NqReport r = check_Nq(sl2_natural(t, a), q);
            py::dict d;
            d["holds"] = r.holds;
            d["b_exponent"] = r.b_exponent;
            d["d_exponent"] = r.d_exponent;
            d["sylow_count"] = r.sylow_count;
            d["witnesses"] = r.witnesses;
            d["reason"] = r.reason;
            return d;
        },
        py::arg("t"), py::arg("a"), py::arg("q"),
        "Brute-force normal-Sylow stabilizer condition for SL2(t^a) on its natural module.");
    m.def(
        "counting_identity",
        [](u64 t, unsigned a, u64 q) { return counting_identity(sl2_natural(t, a), q); },
        py::arg("t"), py::arg("a"), py::arg("q"));
    m.def(
        "singer_check",
        [](u64 t, unsigned a) {
            SingerReport r = singer_check(t, a);
            py::dict d;
            d["p"] = r.p;
            d["centralizer_order"] = r.centralizer_order;
            d["is_cyclic"] = r.is_cyclic;
            return d;
        },
        py::arg("t"), py::arg("a"),
        "Centralizer of a Singer-cycle power of primitive prime order in GL_a(t).");
    m.def(
        "sl2_centralizer_check",
        [](u64 t, unsigned a) {
            Sl2CentralizerReport r = sl2_centralizer_check(t, a);
            py::dict d;
            d["centralizer_order"] = r.centralizer_order;
            d["is_cyclic"] = r.is_cyclic;
            d["equals_center_of_GL2_extension"] = r.equals_center_of_GL2_extension;
            return d;
        },
        py::arg("t"), py::arg("a"),
        "Centralizer of the embedded SL2(t^a) inside GL_2a(t).");
}
