#include "coverq_cli/graph_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "coverq/error.hpp"

namespace coverq::cli {

Graph parse_graph(std::string_view text) {
  GraphBuilder builder;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(number, "expected `<label> <label>` or `vertex <label>`, got " +
                                   std::to_string(tokens.size()) + " fields");
    }
    if (tokens[0] == "vertex") {
      builder.add_vertex(tokens[1]);
      continue;
    }
    if (tokens[0] == tokens[1]) throw ParseError(number, "self-loop on " + tokens[0]);
    if (builder.has_edge(tokens[0], tokens[1])) {
      throw ParseError(number, "duplicate edge " + tokens[0] + " " + tokens[1]);
    }
    builder.add_edge(tokens[0], tokens[1]);
  }
  return builder.build();
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const ParseError& e) {
    // Keep the line number in the message; the path goes in front.
    throw ParseError(0, path.string() + ": " + e.what());
  }
}

std::string write_graph(const Graph& g) {
  std::string out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out += "vertex " + g.label(v) + "\n";
  }
  for (const auto& [a, b] : g.edges()) out += g.label(a) + " " + g.label(b) + "\n";
  return out;
}

}  // namespace coverq::cli
