#ifndef SUPERTREES_IO_HPP
#define SUPERTREES_IO_HPP

#include <string>

#include <json.hpp>

#include "supertrees/hypergraph.hpp"

namespace supertrees {

// Interchange format: {"k": int, "n": int, "edges": [[int,...],...]}.
nlohmann::json graph_to_json(const Hypergraph& g);
Hypergraph graph_from_json(const nlohmann::json& j);

Hypergraph load_graph(const std::string& path); // ParseError / IoError
void save_graph(const Hypergraph& g, const std::string& path);

} // namespace supertrees

#endif // SUPERTREES_IO_HPP
