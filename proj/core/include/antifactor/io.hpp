#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "antifactor/degree_spec.hpp"
#include "antifactor/general_graph.hpp"
#include "antifactor/graph.hpp"

namespace antifactor {

// Graph text format:
//   c <comment>
//   p bip NX NY M
//   e i j            (M lines, 1-based X index i and Y index j)
// write_graph emits the header and edge lines only, in edge-id order.
std::string write_graph(const BipartiteGraph& g);
BipartiteGraph read_graph(std::string_view text);
BipartiteGraph read_graph_file(const std::filesystem::path& path);

// General graphs: "p gen N M" then M lines "e u v", 1-based.
std::string write_general_graph(const GeneralGraph& g);
GeneralGraph read_general_graph(std::string_view text);

// Degree-spec document:
//   {"x_default": SET, "y_default": SET,
//    "overrides": [{"side": "x"|"y", "index": i, "set": SET}, ...]}
// where SET is a list of integers or {"base": [...], "tail_from": t}, and
// override indices are 1-based like the graph format.
DegreeSpec read_spec(const nlohmann::json& doc, const BipartiteGraph& g);
DegreeSpec read_spec_file(const std::filesystem::path& path, const BipartiteGraph& g);
nlohmann::json to_json(const DegreeSet& s);
DegreeSet degree_set_from_json(const nlohmann::json& j);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace antifactor
