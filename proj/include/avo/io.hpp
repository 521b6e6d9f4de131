#pragma once

#include "avo/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace avo {

// One line of McKay's graph6 format. Accepts an optional ">>graph6<<" prefix.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// DIMACS edge format: "p edge n m" header, 1-based "e u v" lines, "c" comments.
Graph parse_dimacs(std::string_view text);

// Plain edge list: first line is the vertex count, then 0-based "u v" lines.
Graph parse_edge_list(std::string_view text);

// Weight sidecar, one "v w" pair per line; unlisted vertices default to 1.
std::vector<std::uint64_t> parse_weights(std::string_view text, int n);

// {"n": int, "edges": [[u,v],...], "weights": [...]} (weights optional).
WeightedGraph parse_json_graph(std::string_view text);

enum class GraphFormat { graph6, dimacs, edge_list, json };

std::optional<GraphFormat> format_from_extension(std::string_view path);
Graph parse_graph(std::string_view text, GraphFormat format);

} // namespace avo
