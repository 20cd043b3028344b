#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "coverq/graph.hpp"

namespace coverq::cli {

/// Graph text format: one edge per line as `<label> <label>`, isolated
/// vertices as `vertex <label>`, `#` starts a comment. Vertices are numbered
/// in order of first appearance. Throws ParseError with the line number.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Inverse of parse_graph: every vertex declared in canonical order, then
/// the edges.
std::string write_graph(const Graph& g);

}  // namespace coverq::cli
