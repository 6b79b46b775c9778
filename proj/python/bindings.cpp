#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "domcert/brute.hpp"
#include "domcert/certifier.hpp"
#include "domcert/disjoint_paths.hpp"
#include "domcert/generators.hpp"
#include "domcert/io.hpp"
#include "domcert/loop_forest.hpp"
#include "domcert/lowhigh.hpp"
#include "domcert/semidom.hpp"
#include "domcert/trees.hpp"

namespace py = pybind11;
using namespace domcert;

namespace {

LowHighOrder order_for(const FlowGraph& g, const DomTree& dom, const SemiDomInfo& info,
                       const std::string& method) {
    if (method == "reducible") return lowhigh_reducible(g, dom);
    if (method == "ist") {
        TreePair pair = build_from_semidominators(g, info);
        return lowhigh_from_trees(g, dom, pair);
    }
    if (method == "loops") {
        LoopForest lf = compute_loop_forest(g, info.dfs);
        return lowhigh_from_loops(g, dom, lf);
    }
    throw std::invalid_argument("method must be 'loops', 'reducible', or 'ist'");
}

}  // namespace

PYBIND11_MODULE(domcert, m) {
    m.doc() = "dominator tree certification, low-high orders, independent spanning trees";

    py::register_exception<Error>(m, "DomcertError");

    py::class_<FlowGraph>(m, "FlowGraph")
        .def_static(
            "build",
            [](Vertex n, Vertex s, const std::vector<Arc>& arcs, bool prune) {
                return FlowGraph::build(n, s, arcs, BuildOptions{prune});
            },
            py::arg("n"), py::arg("s"), py::arg("arcs"), py::arg("prune") = false)
        .def_property_readonly("n", &FlowGraph::vertex_count)
        .def_property_readonly("s", &FlowGraph::start)
        .def_property_readonly("m", &FlowGraph::arc_count)
        .def("arcs",
             [](const FlowGraph& g) {
                 std::vector<Arc> arcs;
                 for (ArcId a = 0; a < g.arc_count(); ++a) arcs.push_back(g.arc(a));
                 return arcs;
             })
        .def("__repr__", [](const FlowGraph& g) {
            std::ostringstream os;
            os << "FlowGraph(n=" << g.vertex_count() << ", m=" << g.arc_count()
               << ", s=" << g.start() << ")";
            return os.str();
        });

    m.def(
        "dominator_tree",
        [](const FlowGraph& g) {
            auto [dom, info] = compute_dominator_tree(g);
            return dom.parent;
        },
        py::arg("graph"), "Immediate dominator of every vertex (-1 at the start vertex).");

    m.def(
        "certificate",
        [](const FlowGraph& g, const std::string& method) {
            auto [dom, info] = compute_dominator_tree(g);
            LowHighOrder lh = order_for(g, dom, info, method);
            return std::make_pair(dom.parent, lh.rank);
        },
        py::arg("graph"), py::arg("method") = "loops",
        "Dominator tree parents plus a low-high order certifying them.");

    m.def(
        "verify",
        [](const FlowGraph& g, const std::vector<Vertex>& parent,
           const std::vector<Vertex>& rank) {
            Verdict v = verify(g, DomCertificate{parent, rank});
            return std::make_pair(v.accepted,
                                  v.accepted ? std::string() : v.violation->to_string());
        },
        py::arg("graph"), py::arg("parent"), py::arg("rank"),
        "Check a claimed dominator tree with a claimed low-high order.");

    m.def(
        "independent_spanning_trees",
        [](const FlowGraph& g, int alg) {
            auto [dom, info] = compute_dominator_tree(g);
            if (alg == 8) {
                TreePair p = build_from_semidominators(g, info);
                return std::make_pair(p.b, p.r);
            }
            LoopForest lf = compute_loop_forest(g, info.dfs);
            LowHighOrder lh = lowhigh_from_loops(g, dom, lf);
            TreePair p = build_strongly_independent(g, dom, lh);
            return std::make_pair(p.b, p.r);
        },
        py::arg("graph"), py::arg("alg") = 1,
        "Parent maps of two independent spanning trees (alg 1: strongly "
        "independent; alg 8: from semi-dominators).");

    m.def(
        "loop_headers",
        [](const FlowGraph& g) {
            DfsInfo d = dfs(g);
            LoopForest lf = compute_loop_forest(g, d);
            return lf.header;
        },
        py::arg("graph"), "Loop nesting forest parent of every vertex (-1 for none).");

    py::class_<DisjointPathIndex>(m, "DisjointPathIndex")
        .def_static(
            "build",
            [](Vertex n, const std::vector<Arc>& arcs, Vertex s1, Vertex s2) {
                return DisjointPathIndex::build(n, arcs, s1, s2);
            },
            py::arg("n"), py::arg("arcs"), py::arg("s1"), py::arg("s2"))
        .def("exists", &DisjointPathIndex::query_exists, py::arg("u"), py::arg("v"))
        .def("paths", &DisjointPathIndex::query_paths, py::arg("u"), py::arg("v"))
        .def("entry", &DisjointPathIndex::entry, py::arg("v"));

    m.def(
        "generate",
        [](const std::string& family, Vertex n, ArcId m_, std::uint64_t seed) {
            GraphData d = generate_data(GenSpec{parse_family(family), n, m_, seed});
            return std::make_tuple(d.n, d.s, d.arcs);
        },
        py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("seed") = 0,
        "Deterministic graph generator; returns (n, s, arcs).");
}
