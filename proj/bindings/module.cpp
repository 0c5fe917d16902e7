#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supertrees/canonical.hpp"
#include "supertrees/enumerate.hpp"
#include "supertrees/error.hpp"
#include "supertrees/families.hpp"
#include "supertrees/harness.hpp"
#include "supertrees/hypergraph.hpp"
#include "supertrees/io.hpp"
#include "supertrees/report.hpp"
#include "supertrees/spectral.hpp"
#include "supertrees/surgery.hpp"

namespace py = pybind11;
using namespace supertrees;

namespace {

Tensor tensor_from(const std::string& name) {
    if (name == "q" || name == "Q") return Tensor::Q;
    if (name == "a" || name == "A") return Tensor::A;
    throw Error(ErrorCode::BadParams, "tensor must be 'q' or 'a'");
}

SolverOptions make_options(double tol, int max_iter, std::optional<double> shift) {
    SolverOptions o;
    o.tolerance = tol;
    o.max_iterations = max_iter;
    o.shift = shift;
    return o;
}

std::string report_text(const Report& r, const std::string& format) {
    std::ostringstream out;
    if (format == "csv")
        write_report_csv(r, out);
    else if (format == "json")
        write_report_json(r, out);
    else
        throw Error(ErrorCode::BadParams, "format must be 'csv' or 'json'");
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spectral toolkit for k-uniform supertrees";

    auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<ConvergenceError>(m, "ConvergenceError", err);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, int, std::vector<Edge>>(), py::arg("k"), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("k", &Hypergraph::k)
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("m", &Hypergraph::m)
        .def_property_readonly("edges", [](const Hypergraph& g) { return g.edges(); })
        .def("degree", &Hypergraph::degree, py::arg("v"))
        .def("degrees", &Hypergraph::degrees)
        .def("max_degree", &Hypergraph::max_degree)
        .def("is_connected", &Hypergraph::is_connected)
        .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
        .def("__repr__", [](const Hypergraph& g) {
            std::ostringstream s;
            s << "Hypergraph(k=" << g.k() << ", n=" << g.n() << ", m=" << g.m() << ")";
            return s.str();
        });

    py::class_<Supertree>(m, "Supertree")
        .def(py::init<Hypergraph>(), py::arg("graph"))
        .def_property_readonly("graph", &Supertree::graph)
        .def_property_readonly("k", &Supertree::k)
        .def_property_readonly("n", &Supertree::n)
        .def_property_readonly("m", &Supertree::m)
        .def_property_readonly("edges", [](const Supertree& t) { return t.edges(); })
        .def("degree", &Supertree::degree, py::arg("v"))
        .def("__repr__", [](const Supertree& t) {
            std::ostringstream s;
            s << "Supertree(k=" << t.k() << ", n=" << t.n() << ", m=" << t.m() << ")";
            return s.str();
        });

    m.def("validate_supertree", &validate_supertree, py::arg("graph"));
    m.def("distances_from", &distances_from, py::arg("graph"), py::arg("source"));
    m.def("diameter", &diameter, py::arg("tree"));
    m.def("pendent_counts", &pendent_counts, py::arg("tree"));
    m.def("is_pendent_edge", &is_pendent_edge, py::arg("graph"), py::arg("edge_index"));
    m.def("is_power_hypertree", &is_power_hypertree, py::arg("tree"));
    m.def("relabel", &relabel, py::arg("graph"), py::arg("perm"));

    m.def(
        "canonical_code", [](const Supertree& t) { return canonical_code(t).value; },
        py::arg("tree"));
    m.def(
        "canonical_code_marked",
        [](const Supertree& t, int v) { return canonical_code(t, v).value; },
        py::arg("tree"), py::arg("marked_vertex"));
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
    m.def("vertex_orbits", &vertex_orbits, py::arg("tree"));

    py::class_<SpectralResult>(m, "SpectralResult")
        .def_readonly("value", &SpectralResult::value)
        .def_readonly("lower", &SpectralResult::lower)
        .def_readonly("upper", &SpectralResult::upper)
        .def_readonly("eigenvector", &SpectralResult::eigenvector)
        .def_readonly("residual", &SpectralResult::residual)
        .def_readonly("iterations", &SpectralResult::iterations)
        .def("__repr__", [](const SpectralResult& r) {
            std::ostringstream s;
            s << "SpectralResult(value=" << r.value << ", iterations=" << r.iterations << ")";
            return s.str();
        });

    m.def(
        "apply_Q", [](const Hypergraph& g, const std::vector<double>& x) { return apply_Q(g, x); },
        py::arg("graph"), py::arg("x"));
    m.def(
        "apply_A", [](const Hypergraph& g, const std::vector<double>& x) { return apply_A(g, x); },
        py::arg("graph"), py::arg("x"));
    m.def(
        "rayleigh",
        [](const Hypergraph& g, const std::vector<double>& x, const std::string& tensor) {
            return rayleigh(g, x, tensor_from(tensor));
        },
        py::arg("graph"), py::arg("x"), py::arg("tensor") = "q");
    m.def(
        "spectral_radius",
        [](const Hypergraph& g, const std::string& tensor, double tol, int max_iter,
           std::optional<double> shift) {
            return spectral_radius(g, tensor_from(tensor), make_options(tol, max_iter, shift));
        },
        py::arg("graph"), py::arg("tensor") = "q", py::arg("tol") = 1e-10,
        py::arg("max_iter") = 200000, py::arg("shift") = py::none());
    m.def("oracle_rayleigh_max", &oracle_rayleigh_max, py::arg("graph"),
          py::arg("restarts") = 8, py::arg("steps") = 200);
    m.def("matrix_oracle_q", &matrix_oracle_q, py::arg("graph"));

    py::class_<DegreeSequence>(m, "DegreeSequence")
        .def(py::init<std::vector<int>, int>(), py::arg("degrees"), py::arg("k"))
        .def_readonly("degrees", &DegreeSequence::degrees)
        .def_readonly("k", &DegreeSequence::k)
        .def_property_readonly("m", &DegreeSequence::m)
        .def_property_readonly("n", &DegreeSequence::n);

    py::class_<BFSOrdering>(m, "BFSOrdering")
        .def_readonly("order", &BFSOrdering::order)
        .def_readonly("heights", &BFSOrdering::heights);

    py::class_<BFSSupertree>(m, "BFSSupertree")
        .def_readonly("tree", &BFSSupertree::tree)
        .def_readonly("ordering", &BFSSupertree::ordering);

    m.def("loose_path", &loose_path, py::arg("m"), py::arg("k"));
    m.def("hyperstar", &hyperstar, py::arg("m"), py::arg("k"));
    m.def("power_k", &power_k, py::arg("tree_edges"), py::arg("k"));
    m.def("s1", &s1, py::arg("m"), py::arg("d"), py::arg("k"));
    m.def("s2", &s2, py::arg("m"), py::arg("d"), py::arg("k"));
    m.def("s3", &s3, py::arg("m"), py::arg("d"), py::arg("k"));
    m.def("s4", &s4, py::arg("m"), py::arg("k"));
    m.def("t1", &t1, py::arg("n"), py::arg("p"), py::arg("k"));
    m.def("pendant_degree_sequence", &pendant_degree_sequence, py::arg("n"), py::arg("q"),
          py::arg("k"));
    m.def("bfs_supertree", &bfs_supertree, py::arg("pi"));
    m.def("bfs_heights_consistent", &bfs_heights_consistent, py::arg("tree"), py::arg("ordering"));
    m.def("bfs_clause_a", &bfs_clause_a, py::arg("tree"), py::arg("ordering"));
    m.def("bfs_clause_b", &bfs_clause_b, py::arg("tree"), py::arg("ordering"));
    m.def("bfs_clause_c", &bfs_clause_c, py::arg("tree"), py::arg("ordering"));
    m.def("bfs_clause_d", &bfs_clause_d, py::arg("tree"), py::arg("ordering"));
    m.def("is_bfs_ordering", &is_bfs_ordering, py::arg("tree"), py::arg("ordering"));

    m.def("move_edges", &move_edges, py::arg("graph"), py::arg("u"), py::arg("moves"));
    m.def("edge_release", &edge_release, py::arg("tree"), py::arg("e"), py::arg("u"));
    m.def("branch_collapse", &branch_collapse, py::arg("tree"), py::arg("e"), py::arg("keep"));
    m.def("two_switch", &two_switch, py::arg("graph"), py::arg("e"), py::arg("f"), py::arg("u1"),
          py::arg("v1"));
    m.def("graft_step", &graft_step, py::arg("graph"), py::arg("u"), py::arg("p"), py::arg("q"));

    m.def("enumerate_supertrees", &enumerate_supertrees, py::arg("m"), py::arg("k"),
          py::arg("allow_large") = false);

    py::class_<RankedEntry>(m, "RankedEntry")
        .def_property_readonly("code", [](const RankedEntry& e) { return e.code.value; })
        .def_readonly("q_value", &RankedEntry::q_value)
        .def_readonly("lower", &RankedEntry::lower)
        .def_readonly("upper", &RankedEntry::upper)
        .def_readonly("iterations", &RankedEntry::iterations)
        .def_readonly("tie_group", &RankedEntry::tie_group);

    m.def(
        "rank_by_q",
        [](const std::vector<Supertree>& graphs, double tol, int max_iter,
           std::optional<double> shift) {
            return rank_by_q(graphs, make_options(tol, max_iter, shift));
        },
        py::arg("graphs"), py::arg("tol") = 1e-10, py::arg("max_iter") = 200000,
        py::arg("shift") = py::none());

    m.def(
        "load_graph", [](const std::string& path) { return load_graph(path); }, py::arg("path"));
    m.def(
        "save_graph", [](const Hypergraph& g, const std::string& path) { save_graph(g, path); },
        py::arg("graph"), py::arg("path"));
    m.def(
        "graph_to_json", [](const Hypergraph& g) { return graph_to_json(g).dump(2); },
        py::arg("graph"));
    m.def(
        "graph_from_json",
        [](const std::string& text) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorCode::ParseError, e.what());
            }
            return graph_from_json(j);
        },
        py::arg("text"));

    py::class_<Report>(m, "Report")
        .def_readonly("claim_id", &Report::claim_id)
        .def_readonly("grid", &Report::grid)
        .def_readonly("columns", &Report::columns)
        .def_readonly("rows", &Report::rows)
        .def_readonly("runtime_seconds", &Report::runtime_seconds)
        .def_readonly("tolerance", &Report::tolerance)
        .def_readonly("max_iterations", &Report::max_iterations)
        .def_readonly("seed", &Report::seed)
        .def_readonly("notes", &Report::notes)
        .def_property_readonly(
            "verdict", [](const Report& r) { return verdict_label(r.verdict, r.scan_wording); })
        .def_property_readonly("exit_code",
                               [](const Report& r) { return verdict_exit_code(r.verdict); })
        .def("to_csv", [](const Report& r) { return report_text(r, "csv"); })
        .def("to_json", [](const Report& r) { return report_text(r, "json"); })
        .def("__repr__", [](const Report& r) {
            std::ostringstream s;
            s << "Report(claim_id='" << r.claim_id << "', verdict='"
              << verdict_label(r.verdict, r.scan_wording) << "', rows=" << r.rows.size() << ")";
            return s.str();
        });

    m.def("known_claims", [] { return known_claims(); });
    m.def(
        "verify",
        [](const std::string& claim, const std::string& grid, double tol, int max_iter,
           std::uint64_t seed, std::optional<double> shift) {
            return verify(claim, Grid::parse(grid), make_options(tol, max_iter, shift), seed);
        },
        py::arg("claim"), py::arg("grid") = "", py::arg("tol") = 1e-10,
        py::arg("max_iter") = 200000, py::arg("seed") = 1, py::arg("shift") = py::none());
    m.def(
        "conjecture_scan",
        [](const std::string& d, const std::string& mm, const std::string& kk, double tol,
           int max_iter, std::optional<double> shift) {
            return conjecture_scan(d, mm, kk, make_options(tol, max_iter, shift));
        },
        py::arg("d"), py::arg("m"), py::arg("k") = "3", py::arg("tol") = 1e-10,
        py::arg("max_iter") = 200000, py::arg("shift") = py::none());
}
