#include "supertrees/io.hpp"

#include <fstream>
#include <sstream>

#include "supertrees/error.hpp"

namespace supertrees {

nlohmann::json graph_to_json(const Hypergraph& g) {
    nlohmann::json j;
    j["k"] = g.k();
    j["n"] = g.n();
    j["edges"] = g.edges();
    return j;
}

namespace {

int require_int(const nlohmann::json& j, const std::string& field) {
    if (!j.contains(field))
        throw Error(ErrorCode::ParseError, "missing field \"" + field + "\"");
    const auto& v = j.at(field);
    if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError, "field \"" + field + "\" must be an integer");
    return v.get<int>();
}

} // namespace

Hypergraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "graph must be a JSON object");
    int k = require_int(j, "k");
    int n = require_int(j, "n");
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw Error(ErrorCode::ParseError, "field \"edges\" must be an array");

    std::vector<Edge> edges;
    int index = 0;
    for (const auto& item : j.at("edges")) {
        if (!item.is_array())
            throw Error(ErrorCode::ParseError,
                        "edge " + std::to_string(index) + " must be an array");
        Edge e;
        for (const auto& v : item) {
            if (!v.is_number_integer())
                throw Error(ErrorCode::ParseError,
                            "edge " + std::to_string(index) + " has a non-integer vertex");
            e.push_back(v.get<int>());
        }
        edges.push_back(std::move(e));
        ++index;
    }

    try {
        return Hypergraph(k, n, std::move(edges));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Hypergraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    return graph_from_json(j);
}

void save_graph(const Hypergraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << graph_to_json(g).dump(2) << '\n';
    if (!out)
        throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

} // namespace supertrees
