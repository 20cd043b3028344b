#include "coverq_cli/app.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "coverq/error.hpp"
#include "coverq_cli/commands.hpp"
#include "coverq_cli/config.hpp"
#include "coverq_cli/graph_file.hpp"

namespace coverq::cli {

namespace {

constexpr int kUsageError = 3;

struct Emit {
  std::ostream& out;
  std::optional<std::string> path;

  void operator()(const std::string& text) const {
    if (!path) {
      out << text;
      return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw ParseError(0, "cannot write " + *path);
    file << text;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cover ideals of paths and chordal graphs: rooted orders, powers, linear quotients"};
  app.name("coverq");
  app.require_subcommand(1);
  app.fallthrough();

  SettingLayer flags;
  std::string config_path;
  std::string output_path;
  bool timings = false;
  app.add_option("--format", flags.format, "Output format: text, json or tsv");
  app.add_option("--jobs", flags.jobs, "Worker threads for verify and hunt");
  app.add_option("--max-pairs", flags.max_pairs, "Size guard: most divisibility checks per power");
  app.add_option("--config", config_path, "key=value file (max_pairs, jobs, format)");
  app.add_option("--output", output_path, "Write the report to this file instead of stdout");
  app.add_flag("--timings", timings, "Record per-case wall time");

  auto* tables = app.add_subcommand("tables", "Rebuild the rooted-list tables and compare with the fixture");
  std::size_t tables_max_n = kGoldenMaxN;
  tables->add_option("--max-n", tables_max_n, "Largest path size")->required();

  auto* verify = app.add_subcommand("verify", "Run property suites on paths up to --max-n");
  std::size_t verify_max_n = 10;
  std::vector<std::string> suite_names;
  bool uncapped = false;
  VerifyOptions verify_options;
  verify->add_option("--max-n", verify_max_n, "Largest path size")->required();
  verify->add_option("--suite", suite_names, "Suite to run (repeatable); default all");
  verify->add_flag("--uncapped", uncapped, "Do not clamp --max-n to each suite's default range");
  verify->add_option("--chordal-samples", verify_options.chordal_samples,
                     "Random chordal graphs in oracle-equality");
  verify->add_option("--chordal-seed", verify_options.chordal_seed, "Seed for those graphs");

  auto* hunt = app.add_subcommand("hunt", "Look for chordal graphs whose rooted order fails linear quotients");
  HuntOptions hunt_options;
  std::string hunt_graph_path;
  hunt->add_option("--vertices", hunt_options.vertices, "Vertices per random graph")->required();
  hunt->add_option("--trials", hunt_options.trials, "Number of graphs")->required();
  hunt->add_option("--seed", hunt_options.seed, "Random seed")->required();
  hunt->add_option("--strategy", hunt_options.strategies,
                   "lowest, highest, shuffled or explicit:a,b,... (repeatable)");
  hunt->add_option("--graph", hunt_graph_path, "Use this graph for every trial");

  auto* covers = app.add_subcommand("covers", "List the minimal vertex covers of a graph");
  std::string covers_path;
  covers->add_option("file", covers_path, "Graph file")->required();

  std::optional<std::size_t> path_n;
  std::string source_path;
  std::string strategy_name = "lowest";
  auto* rooted = app.add_subcommand("rooted", "Print the rooted list of a path or chordal graph");
  auto* rooted_path = rooted->add_option("--path", path_n, "Path on N vertices");
  rooted->add_option("file", source_path, "Graph file")->excludes(rooted_path);
  rooted->add_option("--strategy", strategy_name, "lowest, highest or explicit:a,b,...");

  auto* pw = app.add_subcommand("power", "List F(I^s) and G(I^s) for the cover ideal");
  unsigned s = 2;
  auto* power_path = pw->add_option("--path", path_n, "Path on N vertices");
  pw->add_option("file", source_path, "Graph file")->excludes(power_path);
  pw->add_option("-s,--s", s, "Exponent")->required();
  pw->add_option("--strategy", strategy_name, "lowest, highest or explicit:a,b,...");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    SettingLayer file;
    if (!config_path.empty()) file = read_config_file(config_path);
    const auto settings = resolve_settings(flags, read_environment(), file);
    const PowerLimits limits{settings.max_pairs};
    const Emit emit{out, output_path.empty() ? std::nullopt : std::optional(output_path)};

    auto source = [&]() {
      Source src;
      if (path_n) {
        src.path_n = *path_n;
      } else if (!source_path.empty()) {
        src.graph = read_graph_file(source_path);
        src.strategy = parse_strategy(strategy_name);
      } else {
        throw ParseError(0, "give --path N or a graph file");
      }
      return src;
    };

    if (tables->parsed()) {
      const auto report = cmd_tables({tables_max_n, limits, timings});
      emit(render(report, settings.format));
      return exit_code(report);
    }
    if (verify->parsed()) {
      VerifyCommand command;
      command.max_n = verify_max_n;
      for (const auto& name : suite_names) {
        const auto suite = suite_from_name(name);
        if (!suite) {
          std::string known;
          for (const auto& info : suite_catalog()) known += (known.empty() ? "" : ", ") + std::string(info.name);
          throw ParseError(0, "unknown suite '" + name + "' (" + known + ")");
        }
        command.suites.push_back(*suite);
      }
      command.options = verify_options;
      command.options.uncapped = uncapped;
      command.options.limits = limits;
      command.jobs = settings.jobs;
      command.timings = timings;
      const auto report = cmd_verify(command);
      emit(render(report, settings.format));
      return exit_code(report);
    }
    if (hunt->parsed()) {
      if (!hunt_graph_path.empty()) hunt_options.graph = read_graph_file(hunt_graph_path);
      hunt_options.limits = limits;
      hunt_options.jobs = settings.jobs;
      hunt_options.timings = timings;
      const auto report = cmd_hunt(hunt_options);
      emit(render(report, settings.format));
      return exit_code(report);
    }
    if (covers->parsed()) {
      emit(render(cmd_covers(read_graph_file(covers_path)), settings.format));
      return 0;
    }
    if (rooted->parsed()) {
      emit(render(cmd_rooted(source()), settings.format));
      return 0;
    }
    if (pw->parsed()) {
      emit(render(cmd_power(source(), s, limits), settings.format));
      return 0;
    }
  } catch (const ParseError& e) {
    err << "coverq: " << e.what() << "\n";
    return kUsageError;
  } catch (const NotChordal& e) {
    err << "coverq: " << e.what() << "\n";
    return kUsageError;
  } catch (const GuardExceeded& e) {
    err << "coverq: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "coverq: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "coverq: internal error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}

}  // namespace coverq::cli
