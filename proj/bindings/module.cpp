#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hampreserve/connectivity.hpp"
#include "hampreserve/edge_pairs.hpp"
#include "hampreserve/errors.hpp"
#include "hampreserve/hamilton.hpp"
#include "hampreserve/instances.hpp"
#include "hampreserve/io.hpp"
#include "hampreserve/oracle.hpp"
#include "hampreserve/preserve.hpp"

namespace py = pybind11;
using namespace hp;

namespace {

using PyEdge = std::pair<int, int>;

EdgeList to_edges(const std::vector<PyEdge>& es) {
    EdgeList out;
    out.reserve(es.size());
    for (auto [u, v] : es) out.push_back({u, v});
    return out;
}

std::vector<PyEdge> from_edges(const EdgeList& es) {
    std::vector<PyEdge> out;
    out.reserve(es.size());
    for (const Edge& e : es) out.emplace_back(e.u, e.v);
    return out;
}

std::vector<PyEdge> from_pairs_flat(const std::vector<EdgePair>& pairs) {
    EdgeList flat;
    for (const EdgePair& p : pairs) {
        flat.push_back(p.e1);
        flat.push_back(p.e2);
    }
    return from_edges(flat);
}

std::vector<std::pair<PyEdge, PyEdge>> from_pairs(
    const std::vector<EdgePair>& pairs) {
    std::vector<std::pair<PyEdge, PyEdge>> out;
    out.reserve(pairs.size());
    for (const EdgePair& p : pairs)
        out.emplace_back(PyEdge{p.e1.u, p.e1.v}, PyEdge{p.e2.u, p.e2.v});
    return out;
}

VertexSet to_set(int n, const std::vector<int>& vs) {
    return VertexSet::of(n, vs);
}

}  // namespace

PYBIND11_MODULE(_hampreserve, m) {
    m.doc() = "connectivity-preserving Hamiltonian cycle toolkit";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
    py::register_exception<ExceptionalInputError>(m, "ExceptionalInputError",
                                                  PyExc_ValueError);
    py::register_exception<NotApplicableError>(m, "NotApplicableError");
    py::register_exception<BoundViolationError>(m, "BoundViolationError");
    py::register_exception<InfeasibleError>(m, "InfeasibleError");
    py::register_exception<ExtractionFailureError>(m, "ExtractionFailureError");
    py::register_exception<StaleCertificateError>(m, "StaleCertificateError");
    py::register_exception<InternalConsistencyError>(
        m, "InternalConsistencyError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<PyEdge>& es) {
                 return Graph(n, to_edges(es));
             }),
             py::arg("n"), py::arg("edges"))
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("has_edge",
             [](const Graph& g, int u, int v) { return g.has_edge(u, v); })
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("degree", &Graph::degree)
        .def("min_degree", &Graph::min_degree)
        .def("max_degree", &Graph::max_degree)
        .def("edges", [](const Graph& g) { return from_edges(g.edges()); })
        .def("neighbors",
             [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) +
                   ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("remove_edges", [](const Graph& g, const std::vector<PyEdge>& es) {
        return remove_edges(g, to_edges(es));
    });
    m.def("graph_hash", &graph_hash);
    m.def("is_connected", &is_connected);

    m.def("read_graph", [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
    });
    m.def("read_graph_file", &read_graph_file);
    m.def("write_edge_list",
          [](const Graph& g, const std::string& header) {
              std::ostringstream out;
              write_edge_list(out, g, header);
              return out.str();
          },
          py::arg("g"), py::arg("header") = "");

    m.def("kappa", &kappa);
    m.def("is_k_connected", &is_k_connected);
    m.def("min_vertex_cut", [](const Graph& g) {
        VertexCut c = min_vertex_cut(g);
        return py::make_tuple(c.cut, c.side_a, c.side_b);
    });
    m.def("disjoint_paths",
          [](const Graph& g, const std::vector<int>& a,
             const std::vector<int>& b, int k) {
              return disjoint_paths(g, to_set(g.order(), a),
                                    to_set(g.order(), b), k)
                  .paths;
          });
    m.def("ch_sufficient", &ch_sufficient);

    m.def("phi", &phi);
    m.def("can_decompose", &can_decompose);
    m.def("decompose_into_pairs",
          [](const Graph& g) { return from_pairs(decompose_into_pairs(g)); });
    m.def("max_edge_disjoint_pairs", [](const Graph& g) {
        auto [count, witness] = max_edge_disjoint_pairs(g);
        return py::make_tuple(count, from_pairs(witness));
    });

    m.def("ham_cycle_dirac", &ham_cycle_dirac);
    m.def("ham_path_between", &ham_path_between);
    m.def("edge_disjoint_ham_paths",
          [](const Graph& g, const std::vector<PyEdge>& ends) {
              std::vector<std::pair<int, int>> e(ends.begin(), ends.end());
              return edge_disjoint_ham_paths(g, e);
          });
    m.def("ham_cycle_backtracking",
          [](const Graph& g, long long budget) {
              return ham_cycle_backtracking(g, budget);
          },
          py::arg("g"), py::arg("budget") = 1'000'000);

    py::class_<PreserveCertificate>(m, "PreserveCertificate")
        .def_readonly("n", &PreserveCertificate::n)
        .def_readonly("k", &PreserveCertificate::k)
        .def_readonly("ell", &PreserveCertificate::ell)
        .def_readonly("exact", &PreserveCertificate::exact)
        .def_readonly("cycles", &PreserveCertificate::cycles)
        .def_readonly("cut", &PreserveCertificate::cut)
        .def_readonly("kappa_before", &PreserveCertificate::kappa_before)
        .def_readonly("kappa_after", &PreserveCertificate::kappa_after)
        .def_readonly("stage_log", &PreserveCertificate::stage_log)
        .def_readonly("repaired", &PreserveCertificate::repaired)
        .def_readonly("bounds_ok", &PreserveCertificate::bounds_ok)
        .def_property_readonly(
            "bridge",
            [](const PreserveCertificate& c) { return from_edges(c.bridge); })
        .def("to_json",
             [](const PreserveCertificate& c) { return c.to_json().dump(2); })
        .def_static("from_json", [](const std::string& text) {
            return PreserveCertificate::from_json(nlohmann::json::parse(text));
        });

    m.def("preserve_one", [](const Graph& g, int k) {
        return preserve_one(g, k);
    });
    m.def("preserve_many", [](const Graph& g, int k, int ell) {
        return preserve_many(g, k, ell);
    });
    m.def("preserve_exact", [](const Graph& g, int ell) {
        return preserve_exact(g, ell);
    });

    m.def("verify_certificate",
          [](const Graph& g, const PreserveCertificate& cert, int k,
             bool exact) {
              VerificationReport r = verify_certificate(g, cert, k, exact);
              std::vector<std::tuple<std::string, bool, std::string>> checks;
              for (const auto& c : r.checks)
                  checks.emplace_back(c.name, c.pass, c.detail);
              return py::make_tuple(r.pass, checks);
          },
          py::arg("g"), py::arg("cert"), py::arg("k"),
          py::arg("exact") = false);

    m.def("brute_ham_enum",
          [](const Graph& g, long long limit) {
              return brute_ham_enum(g, limit);
          },
          py::arg("g"), py::arg("limit") = 1'000'000);
    m.def("brute_max_pairs", &brute_max_pairs);
    m.def("brute_preserving_exists", &brute_preserving_exists);
    m.def("brute_kappa", &brute_kappa);

    m.def("gen_dirac", &gen_dirac, py::arg("n"), py::arg("seed"),
          py::arg("surplus") = 0);
    m.def("gen_barbell_dirac", &gen_barbell_dirac, py::arg("n"), py::arg("k"),
          py::arg("seed"), py::arg("crossing_rich") = false);
    m.def("gen_ch_tightness", &gen_ch_tightness, py::arg("n"), py::arg("k"));
}
