#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

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

namespace st = supertrees;

namespace {

st::Hypergraph read_graph(const std::string& path) {
    if (path.empty() || path == "-") {
        nlohmann::json j;
        try {
            std::cin >> j;
        } catch (const nlohmann::json::exception& e) {
            throw st::Error(st::ErrorCode::ParseError, std::string("stdin: ") + e.what());
        }
        return st::graph_from_json(j);
    }
    return st::load_graph(path);
}

void write_graph(const st::Hypergraph& g, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << st::graph_to_json(g).dump(2) << '\n';
        return;
    }
    st::save_graph(g, path);
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw st::Error(st::ErrorCode::IoError, "cannot open " + path + " for writing");
    out << text;
    if (!out)
        throw st::Error(st::ErrorCode::IoError, "write to " + path + " failed");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::stringstream inner(token);
        std::string piece;
        while (inner >> piece) {
            try {
                std::size_t pos = 0;
                out.push_back(std::stoi(piece, &pos));
                if (pos != piece.size()) throw std::invalid_argument(piece);
            } catch (const std::exception&) {
                throw st::Error(st::ErrorCode::BadParams, "bad integer '" + piece + "'");
            }
        }
    }
    return out;
}

// "edge:vertex" pairs, comma separated: "0:4,2:7"
std::vector<std::pair<int, int>> parse_moves(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        auto colon = token.find(':');
        if (colon == std::string::npos)
            throw st::Error(st::ErrorCode::BadParams,
                            "move '" + token + "' must be edge:vertex");
        auto a = parse_int_list(token.substr(0, colon));
        auto b = parse_int_list(token.substr(colon + 1));
        if (a.size() != 1 || b.size() != 1)
            throw st::Error(st::ErrorCode::BadParams,
                            "move '" + token + "' must be edge:vertex");
        out.emplace_back(a[0], b[0]);
    }
    if (out.empty())
        throw st::Error(st::ErrorCode::BadParams, "no moves given");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral toolkit for k-uniform supertrees"};
    app.require_subcommand(1);

    double tol = 1e-10;
    int max_iter = 200000;
    double shift = 0.0;
    std::uint64_t seed = 1;
    std::string in_path, out_path, format = "csv";

    // families build
    auto* fam = app.add_subcommand("families", "construct named supertree families");
    fam->require_subcommand(1);
    auto* fam_build = fam->add_subcommand("build", "build one family member as JSON");
    std::string family;
    int fm = 0, fd = 0, fk = 3, fn = 0, fp = 0, fq = 0;
    std::string degrees_text;
    fam_build->add_option("family", family,
                          "loose_path | hyperstar | s1 | s2 | s3 | s4 | t1 | bfs")
        ->required();
    fam_build->add_option("--m", fm, "edge count");
    fam_build->add_option("--d", fd, "diameter");
    fam_build->add_option("--k", fk, "edge size (default 3)");
    fam_build->add_option("--n", fn, "vertex count");
    fam_build->add_option("--p", fp, "pendent edge count");
    fam_build->add_option("--q", fq, "pendent vertex count");
    fam_build->add_option("--degrees", degrees_text, "degree sequence for bfs, e.g. 3,2,2,1,1,1,1");
    fam_build->add_option("--out", out_path, "output path (default stdout)");

    // surgery apply
    auto* sur = app.add_subcommand("surgery", "apply a surgery to a graph");
    sur->require_subcommand(1);
    auto* sur_apply = sur->add_subcommand("apply", "apply one operation");
    std::string op, moves_text, keep_text, u1_text, v1_text;
    int su = 0, sedge = 0, se = 0, sf = 0, sp = 0, sq = 0;
    sur_apply->add_option("op", op, "move | release | collapse | two-switch | graft")
        ->required();
    sur_apply->add_option("--in", in_path, "input graph JSON (default stdin)");
    sur_apply->add_option("--out", out_path, "output path (default stdout)");
    sur_apply->add_option("--u", su, "target vertex");
    sur_apply->add_option("--edge", sedge, "edge index (release/collapse)");
    sur_apply->add_option("--e", se, "first edge index (two-switch)");
    sur_apply->add_option("--f", sf, "second edge index (two-switch)");
    sur_apply->add_option("--moves", moves_text, "edge:vertex pairs, e.g. 0:4,2:7");
    sur_apply->add_option("--keep", keep_text, "two vertices kept heavy, e.g. 2,4");
    sur_apply->add_option("--u1", u1_text, "subset of edge e, e.g. 0,1");
    sur_apply->add_option("--v1", v1_text, "subset of edge f, e.g. 6,7");
    sur_apply->add_option("--p", sp, "longer path length (graft)");
    sur_apply->add_option("--q", sq, "shorter path length (graft)");

    // spectral solve
    auto* spc = app.add_subcommand("spectral", "tensor eigenvalue computations");
    spc->require_subcommand(1);
    auto* spc_solve = spc->add_subcommand("solve", "largest H-eigenvalue with certified bracket");
    std::string tensor_text = "q";
    spc_solve->add_option("--in", in_path, "input graph JSON (default stdin)");
    spc_solve->add_option("--out", out_path, "output path (default stdout)");
    spc_solve->add_option("--tensor", tensor_text, "q (signless Laplacian) or a (adjacency)")
        ->check(CLI::IsMember({"q", "a"}));
    spc_solve->add_option("--tol", tol, "bracket width target");
    spc_solve->add_option("--max-iter", max_iter, "iteration cap");
    auto* shift_opt = spc_solve->add_option("--shift", shift, "diagonal shift (default 1 + max degree)");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "rank all classes with m edges by q");
    int em = 0, ek = 3, ed = -1, ep = -1, eq = -1;
    bool allow_large = false;
    std::string e_degrees;
    enum_cmd->add_option("--m", em, "edge count")->required();
    enum_cmd->add_option("--k", ek, "edge size (default 3)");
    enum_cmd->add_option("--d", ed, "keep only diameter d");
    enum_cmd->add_option("--p", ep, "keep only pendent-edge count p");
    enum_cmd->add_option("--q", eq, "keep only pendent-vertex count q");
    enum_cmd->add_option("--degrees", e_degrees, "keep only this degree multiset");
    enum_cmd->add_flag("--allow-large", allow_large, "lift the m(k-1) <= 40 guard");
    enum_cmd->add_option("--tol", tol, "bracket width target");
    enum_cmd->add_option("--max-iter", max_iter, "iteration cap");
    enum_cmd->add_option("--out", out_path, "output path (default stdout)");
    enum_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* ver = app.add_subcommand("verify", "check one claim over a parameter grid");
    std::string claim, grid_text;
    ver->add_option("--claim", claim, "claim id, e.g. thm3.3")->required();
    ver->add_option("--grid", grid_text, "e.g. k=3,d=3..5,m=d+1..d+3,instances=200");
    ver->add_option("--tol", tol, "bracket width target");
    ver->add_option("--max-iter", max_iter, "iteration cap");
    ver->add_option("--seed", seed, "seed for randomized instances");
    ver->add_option("--out", out_path, "report path (default stdout)");
    ver->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // conjecture-scan
    auto* scan = app.add_subcommand("conjecture-scan",
                                    "rank diameter classes, compare second place to s2");
    std::string sd_text, sm_text, sk_text = "3";
    scan->add_option("--d", sd_text, "diameter range, e.g. 4..5")->required();
    scan->add_option("--m", sm_text, "edge range, may use d, e.g. d+1..d+2")->required();
    scan->add_option("--k", sk_text, "edge size range (default 3)");
    scan->add_option("--tol", tol, "bracket width target");
    scan->add_option("--max-iter", max_iter, "iteration cap");
    scan->add_option("--out", out_path, "report path (default stdout)");
    scan->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        st::SolverOptions opts;
        opts.tolerance = tol;
        opts.max_iterations = max_iter;
        if (shift_opt->count() > 0) opts.shift = shift;

        if (fam_build->parsed()) {
            st::Supertree t = [&]() -> st::Supertree {
                if (family == "loose_path") return st::loose_path(fm, fk);
                if (family == "hyperstar") return st::hyperstar(fm, fk);
                if (family == "s1") return st::s1(fm, fd, fk);
                if (family == "s2") return st::s2(fm, fd, fk);
                if (family == "s3") return st::s3(fm, fd, fk);
                if (family == "s4") return st::s4(fm, fk);
                if (family == "t1") return st::t1(fn, fp, fk);
                if (family == "bfs") {
                    if (!degrees_text.empty())
                        return st::bfs_supertree(
                                   st::DegreeSequence(parse_int_list(degrees_text), fk))
                            .tree;
                    return st::bfs_supertree(st::pendant_degree_sequence(fn, fq, fk)).tree;
                }
                throw st::Error(st::ErrorCode::BadParams,
                                "unknown family '" + family +
                                    "' (loose_path hyperstar s1 s2 s3 s4 t1 bfs)");
            }();
            write_graph(t.graph(), out_path);
            return 0;
        }

        if (sur_apply->parsed()) {
            st::Hypergraph g = read_graph(in_path);
            st::Hypergraph result = [&]() -> st::Hypergraph {
                if (op == "move") return st::move_edges(g, su, parse_moves(moves_text));
                if (op == "release") return st::edge_release(st::Supertree(g), sedge, su).graph();
                if (op == "collapse") {
                    auto keep = parse_int_list(keep_text);
                    if (keep.size() != 2)
                        throw st::Error(st::ErrorCode::BadParams,
                                        "--keep needs exactly two vertices");
                    return st::branch_collapse(st::Supertree(g), sedge, {keep[0], keep[1]})
                        .graph();
                }
                if (op == "two-switch")
                    return st::two_switch(g, se, sf, parse_int_list(u1_text),
                                          parse_int_list(v1_text));
                if (op == "graft") return st::graft_step(g, su, sp, sq);
                throw st::Error(st::ErrorCode::BadParams,
                                "unknown op '" + op +
                                    "' (move release collapse two-switch graft)");
            }();
            write_graph(result, out_path);
            return 0;
        }

        if (spc_solve->parsed()) {
            st::Hypergraph g = read_graph(in_path);
            st::Tensor tensor = tensor_text == "a" ? st::Tensor::A : st::Tensor::Q;
            st::SpectralResult res = st::spectral_radius(g, tensor, opts);
            nlohmann::json j;
            j["value"] = res.value;
            j["lower"] = res.lower;
            j["upper"] = res.upper;
            j["eigenvector"] = res.eigenvector;
            j["residual"] = res.residual;
            j["iterations"] = res.iterations;
            write_text(j.dump(2) + "\n", out_path);
            return 0;
        }

        if (enum_cmd->parsed()) {
            auto graphs = st::enumerate_supertrees(em, ek, allow_large);
            if (enum_cmd->count("--d"))
                graphs = st::filter_class(graphs, st::SupertreeClass::diameter(ed));
            if (enum_cmd->count("--p"))
                graphs = st::filter_class(graphs, st::SupertreeClass::pendent_edges(ep));
            if (enum_cmd->count("--q"))
                graphs = st::filter_class(graphs, st::SupertreeClass::pendent_vertices(eq));
            if (!e_degrees.empty())
                graphs = st::filter_class(
                    graphs, st::SupertreeClass::degree_sequence(parse_int_list(e_degrees)));

            std::map<std::string, const st::Supertree*> by_code;
            for (const auto& t : graphs) by_code[st::canonical_code(t).value] = &t;
            auto ranked = st::rank_by_q(graphs, opts);

            std::vector<std::string> columns = {"code", "n", "m", "d", "p", "q_pendent",
                                                "q_value", "lower", "upper", "iterations"};
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : ranked) {
                const st::Supertree& t = *by_code.at(e.code.value);
                auto [p, q] = st::pendent_counts(t);
                std::ostringstream qv, lo, up;
                qv << std::setprecision(12) << e.q_value;
                lo << std::setprecision(17) << e.lower;
                up << std::setprecision(17) << e.upper;
                rows.push_back({e.code.value, std::to_string(t.n()), std::to_string(t.m()),
                                std::to_string(st::diameter(t)), std::to_string(p),
                                std::to_string(q), qv.str(), lo.str(), up.str(),
                                std::to_string(e.iterations)});
            }

            std::ostringstream text;
            if (format == "csv") {
                st::write_csv_table(columns, rows, text);
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& row : rows) {
                    nlohmann::json obj;
                    for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
                    arr.push_back(obj);
                }
                text << arr.dump(2) << '\n';
            }
            write_text(text.str(), out_path);
            return 0;
        }

        if (ver->parsed()) {
            st::Grid grid = st::Grid::parse(grid_text);
            st::Report rep = st::verify(claim, grid, opts, seed);
            st::save_report(rep, out_path, format);
            std::cerr << rep.claim_id << ": " << st::verdict_label(rep.verdict) << '\n';
            return st::verdict_exit_code(rep.verdict);
        }

        if (scan->parsed()) {
            st::Report rep = st::conjecture_scan(sd_text, sm_text, sk_text, opts);
            st::save_report(rep, out_path, format);
            std::cerr << rep.claim_id << ": "
                      << st::verdict_label(rep.verdict, rep.scan_wording) << '\n';
            return st::verdict_exit_code(rep.verdict);
        }
    } catch (const st::ConvergenceError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const st::Error& e) {
        std::cerr << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 3;
}
