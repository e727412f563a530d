#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "oddminor/generators.hpp"
#include "oddminor/odd.hpp"

namespace oddminor {

// Edge-list text: first line "n m", then m lines "u v [w]"; '#' starts a comment line.
// Weights are all present or all absent.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);  // Io when unreadable
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// {id: weight} or [w0, w1, ...]
Graph with_vertex_weights(const Graph& g, const nlohmann::json& w);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// id -> [row, col], named extras as their name
nlohmann::json labels_json(const Generated& gen);

nlohmann::json decomposition_json(const TreeDecomposition& t);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

// {pattern: [[u,v],..], pattern_n, branch: {v:[ids]}, edge_images: {e:[a,b]},
//  witness: {id:colour}, family, params}
nlohmann::json expansion_json(const OddExpansion& e);
OddExpansion expansion_from_json(const nlohmann::json& j);  // Parse on malformed input

nlohmann::json report_json(const StructureReport& r);

}  // namespace oddminor
