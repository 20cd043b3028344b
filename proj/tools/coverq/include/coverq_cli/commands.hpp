#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverq/graph.hpp"
#include "coverq/power.hpp"
#include "coverq/properties.hpp"
#include "coverq/rooted_list.hpp"
#include "coverq_cli/report.hpp"

namespace coverq::cli {

/// Largest table the tables command accepts; past the golden rows only
/// structural checks run.
inline constexpr std::size_t kGoldenMaxN = 7;

struct TablesOptions {
  std::size_t max_n = kGoldenMaxN;
  PowerLimits limits;
  bool timings = false;
};

/// Rebuilds Tables 1 and 2 for n = 2..max_n and compares rows with the
/// embedded fixture, structurally and then byte for byte.
SuiteReport cmd_tables(const TablesOptions& options);

struct VerifyCommand {
  std::size_t max_n = 10;
  std::vector<Suite> suites;  // empty means all
  VerifyOptions options;
  std::size_t jobs = 1;
  bool timings = false;
};

SuiteReport cmd_verify(const VerifyCommand& command);

struct HuntOptions {
  std::size_t vertices = 8;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  /// lowest, highest, shuffled, or explicit:a,b,... Empty means the first
  /// three.
  std::vector<std::string> strategies;
  std::optional<Graph> graph;  // replaces the random graphs when set
  PowerLimits limits;
  std::size_t jobs = 1;
  bool timings = false;
};

/// For each trial: a random chordal graph (or the given one), its rooted
/// list under every strategy, and a linear-quotients check of the rooted
/// order on G(J(G)^2). A failing order is recorded as a finding.
SuiteReport cmd_hunt(const HuntOptions& options);

/// Graph per trial; strategies never consume the trial's random stream.
Graph hunt_graph(const HuntOptions& options, std::size_t trial);
PivotStrategy hunt_strategy(const std::string& name, const Graph& g, std::uint64_t trial_seed);

/// Throws ParseError for unknown names.
void validate_strategy_name(const std::string& name);
PivotStrategy parse_strategy(const std::string& name);

json graph_json(const Graph& g);

/// Where a rooted list comes from: a path size or a chordal graph.
struct Source {
  std::optional<std::size_t> path_n;
  std::optional<Graph> graph;
  PivotStrategy strategy = PivotStrategy::lowest();
};

RootedList rooted_list_for(const Source& source);

Listing cmd_covers(const Graph& g);
Listing cmd_rooted(const Source& source);
Listing cmd_power(const Source& source, unsigned s, const PowerLimits& limits);

}  // namespace coverq::cli
