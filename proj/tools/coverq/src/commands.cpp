#include "coverq_cli/commands.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "coverq/cover_ideal.hpp"
#include "coverq/error.hpp"
#include "coverq/linear_quotients.hpp"
#include "coverq/parallel.hpp"
#include "coverq/minimality.hpp"
#include "coverq_cli/tables.hpp"

namespace coverq::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string describe(const Violations& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.check + ": " + x.detail);
  return join(parts, "; ");
}

std::string row_body(const std::string& row) {
  const auto bar = row.find(" | ");
  auto body = bar == std::string::npos ? row : row.substr(bar + 3);
  if (body.size() >= 2 && body.compare(body.size() - 2, 2, " |") == 0) body.resize(body.size() - 2);
  return body;
}

std::vector<std::string> rendered(std::span<const Monomial> ms, const Alphabet& a) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(render(m, a));
  return out;
}

template <class Row>
CaseRecord golden_case(const std::string& group, std::size_t n, const Row& got,
                       const std::map<std::size_t, Row>& want,
                       const std::map<std::size_t, std::string>& want_text) {
  CaseRecord c{group, "n=" + std::to_string(n), Verdict::Pass, "", std::nullopt};
  const auto text = render_row(got);
  c.detail = row_body(text);
  const auto it = want.find(n);
  if (it == want.end()) return c;
  auto diff = first_difference(it->second, got);
  if (!diff) diff = first_difference(want_text.at(n), text);
  if (diff) {
    c.verdict = Verdict::Fail;
    c.detail = *diff;
  }
  return c;
}

}  // namespace

SuiteReport cmd_tables(const TablesOptions& options) {
  if (options.max_n < 2 || options.max_n > kMaxVariables) {
    throw std::invalid_argument("tables: --max-n must be between 2 and 64");
  }
  const auto& fixture = embedded_tables();
  SuiteReport report;
  report.suite = "tables";
  report.parameters = {{"max_n", options.max_n},
                       {"golden_max_n", kGoldenMaxN},
                       {"max_pairs", options.limits.max_pair_ops}};
  for (std::size_t n = 2; n <= options.max_n; ++n) {
    auto start = Clock::now();
    const auto rl = rooted_list_path(n);
    auto t1 = golden_case("rooted", n, rooted_row(rl), fixture.rooted, fixture.rooted_text);
    if (const auto v = checks::path_oracle(n); !v.empty()) {
      t1.verdict = Verdict::Fail;
      t1.detail = describe(v);
    }
    if (options.timings) t1.seconds = seconds_since(start);
    report.cases.push_back(std::move(t1));

    start = Clock::now();
    CaseRecord t2;
    try {
      const auto p2 = power(rl, 2, options.limits);
      t2 = golden_case("square", n, square_row(p2), fixture.square, fixture.square_text);
    } catch (const PropertyViolation& e) {
      t2 = {"square", "n=" + std::to_string(n), Verdict::Fail, e.what(), std::nullopt};
    } catch (const GuardExceeded& e) {
      t2 = {"square", "n=" + std::to_string(n), Verdict::Error, e.what(), std::nullopt};
    }
    if (options.timings) t2.seconds = seconds_since(start);
    report.cases.push_back(std::move(t2));
  }
  return report;
}

SuiteReport cmd_verify(const VerifyCommand& command) {
  if (command.max_n < 2 || command.max_n > kMaxVariables) {
    throw std::invalid_argument("verify: --max-n must be between 2 and 64");
  }
  std::vector<Suite> suites = command.suites;
  if (suites.empty()) {
    for (const auto& info : suite_catalog()) suites.push_back(info.id);
  }
  std::vector<SuiteCase> plan;
  std::vector<std::string> names;
  for (auto s : suites) {
    names.emplace_back(suite_info(s).name);
    auto part = plan_suite(s, command.max_n, command.options);
    plan.insert(plan.end(), part.begin(), part.end());
  }

  const auto& o = command.options;
  SuiteReport report;
  report.suite = "verify";
  report.parameters = {{"max_n", command.max_n},
                       {"suites", names},
                       {"uncapped", o.uncapped},
                       {"chordal_samples", o.chordal_samples},
                       {"chordal_max_vertices", o.chordal_max_vertices},
                       {"chordal_seed", o.chordal_seed},
                       {"max_pairs", o.limits.max_pair_ops}};

  report.cases = parallel_map<CaseRecord>(plan.size(), command.jobs, [&](std::size_t k) {
    const auto start = Clock::now();
    const auto outcome = run_case(plan[k], o);
    CaseRecord c{std::string(suite_info(plan[k].suite).name), plan[k].id(), Verdict::Pass, "",
                 std::nullopt};
    if (outcome.error) {
      c.verdict = Verdict::Error;
      c.detail = *outcome.error;
    } else if (!outcome.violations.empty()) {
      c.verdict = Verdict::Fail;
      c.detail = describe(outcome.violations);
    }
    if (command.timings) c.seconds = seconds_since(start);
    return c;
  });
  return report;
}

void validate_strategy_name(const std::string& name) {
  if (name == "lowest" || name == "highest" || name == "shuffled") return;
  if (name.rfind("explicit:", 0) == 0 && name.size() > 9) return;
  throw ParseError(0, "unknown strategy '" + name + "' (lowest, highest, shuffled, explicit:a,b,...)");
}

PivotStrategy parse_strategy(const std::string& name) {
  if (name == "lowest") return PivotStrategy::lowest();
  if (name == "highest") return PivotStrategy::highest();
  if (name.rfind("explicit:", 0) == 0 && name.size() > 9) {
    std::vector<std::string> labels;
    std::size_t start = 9;
    while (true) {
      const auto comma = name.find(',', start);
      labels.push_back(name.substr(start, comma == std::string::npos ? comma : comma - start));
      if (labels.back().empty()) throw ParseError(0, "empty label in strategy '" + name + "'");
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return PivotStrategy::priority(std::move(labels));
  }
  throw ParseError(0, "unknown strategy '" + name + "' (lowest, highest, explicit:a,b,...)");
}

Graph hunt_graph(const HuntOptions& options, std::size_t trial) {
  if (options.graph) return *options.graph;
  return random_chordal(options.vertices, mix_seed(options.seed + trial));
}

PivotStrategy hunt_strategy(const std::string& name, const Graph& g, std::uint64_t trial_seed) {
  // A separate stream so that strategies never shift graph generation.
  if (name == "shuffled") return shuffled_strategy(g, mix_seed(trial_seed ^ 0x5bd1e995u));
  return parse_strategy(name);
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
  return {{"vertices", std::vector<std::string>(g.vertices().begin(), g.vertices().end())},
          {"edges", std::move(edges)}};
}

namespace {

json certificate_json(const QuotientCertificate& cert, const RootedList& rl, const Alphabet& a) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"r", s.r}, {"colons", rendered(s.colons, a)}, {"linear", s.all_degree_one}});
  }
  json out{{"passed", cert.passed},
           {"order", rendered(cert.order, a)},
           {"rooted_list", rendered(rl.entries(), a)},
           {"provenance", std::vector<std::string>(rl.provenance().begin(), rl.provenance().end())},
           {"steps", std::move(steps)}};
  if (cert.witness) {
    out["witness"] = {{"r", cert.witness->r}, {"colon", render(cert.witness->colon, a)}};
  }
  return out;
}

struct TrialResult {
  std::vector<CaseRecord> cases;
  std::vector<Finding> findings;
};

}  // namespace

SuiteReport cmd_hunt(const HuntOptions& options) {
  auto names = options.strategies;
  if (names.empty()) names = {"lowest", "highest", "shuffled"};
  for (const auto& n : names) validate_strategy_name(n);
  if (!options.graph) {
    if (options.vertices < 1 || options.vertices > kDefaultExhaustionBound) {
      throw std::invalid_argument("hunt: --vertices must be between 1 and " +
                                  std::to_string(kDefaultExhaustionBound));
    }
  } else {
    if (options.graph->empty() || options.graph->vertex_count() > kDefaultExhaustionBound) {
      throw std::invalid_argument("hunt: the graph needs between 1 and " +
                                  std::to_string(kDefaultExhaustionBound) + " vertices");
    }
    if (!is_chordal(*options.graph)) throw std::invalid_argument("hunt: the graph is not chordal");
  }

  SuiteReport report;
  report.suite = "hunt";
  report.parameters = {{"vertices", options.graph ? options.graph->vertex_count() : options.vertices},
                       {"trials", options.trials},
                       {"seed", options.seed},
                       {"strategies", names},
                       {"graph", options.graph ? graph_json(*options.graph) : json(nullptr)},
                       {"max_pairs", options.limits.max_pair_ops}};

  const auto results = parallel_map<TrialResult>(options.trials, options.jobs, [&](std::size_t t) {
    TrialResult out;
    const auto trial_seed = mix_seed(options.seed + t);
    const auto g = hunt_graph(options, t);
    const auto alphabet = g.alphabet();
    const auto oracle = minimal_vertex_covers(g);
    const std::string instance = "trial " + std::to_string(t);
    for (const auto& name : names) {
      const auto start = Clock::now();
      CaseRecord c{name, instance, Verdict::Pass, "", std::nullopt};
      try {
        const auto strategy = hunt_strategy(name, g, trial_seed);
        const auto rl = rooted_list_chordal(g, strategy);
        if (MonomialSet(std::vector<Monomial>(rl.entries().begin(), rl.entries().end())) != oracle) {
          c.verdict = Verdict::Fail;
          c.detail = "rooted list differs from the minimal vertex covers";
        } else {
          const auto p2 = power(rl, 2, options.limits);
          const auto cert = check_linear_quotients(p2.minimal_generators());
          const auto size = std::to_string(p2.minimal_generators().size());
          c.detail = std::to_string(g.vertex_count()) + " vertices, " +
                     std::to_string(g.edge_count()) + " edges, |G(J^2)| = " + size;
          if (strategy.rule() == PivotStrategy::Rule::Priority) c.detail += ", " + strategy.name();
          if (!cert.passed) {
            c.verdict = Verdict::Finding;
            c.detail += ", colon " + render(cert.witness->colon, alphabet) + " at r = " +
                        std::to_string(cert.witness->r);
            out.findings.push_back({instance, strategy.name(), "linear-quotients-fail",
                                    graph_json(g), certificate_json(cert, rl, alphabet)});
          }
        }
      } catch (const std::exception& e) {
        c.verdict = Verdict::Error;
        c.detail = e.what();
      }
      if (options.timings) c.seconds = seconds_since(start);
      out.cases.push_back(std::move(c));
    }
    return out;
  });
  for (const auto& r : results) {
    report.cases.insert(report.cases.end(), r.cases.begin(), r.cases.end());
    report.findings.insert(report.findings.end(), r.findings.begin(), r.findings.end());
  }
  return report;
}

RootedList rooted_list_for(const Source& source) {
  if (source.path_n) return rooted_list_path(*source.path_n);
  if (source.graph) return rooted_list_chordal(*source.graph, source.strategy);
  throw std::invalid_argument("no rooted list source: give --path N or a graph file");
}

Listing cmd_covers(const Graph& g) {
  const auto covers = minimal_vertex_covers(g);
  const auto alphabet = g.alphabet();
  Listing out;
  out.kind = "covers";
  out.meta = {{"graph", graph_json(g)}, {"count", covers.size()}, {"chordal", is_chordal(g)}};
  out.columns = {"index", "cover", "vertices"};
  for (std::size_t k = 0; k < covers.size(); ++k) {
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (covers[k][v]) labels.push_back(g.label(v));
    }
    out.rows.push_back({std::to_string(k + 1), render(covers[k], alphabet), join(labels, ",")});
  }
  return out;
}

Listing cmd_rooted(const Source& source) {
  const auto rl = rooted_list_for(source);
  const auto alphabet = rl.graph().alphabet();
  Listing out;
  out.kind = "rooted";
  out.meta = {{"size", rl.size()},
              {"notes", std::vector<std::string>(rl.notes().begin(), rl.notes().end())}};
  if (source.path_n) {
    out.meta["path"] = *source.path_n;
  } else {
    out.meta["graph"] = graph_json(rl.graph());
    out.meta["strategy"] = source.strategy.name();
  }
  std::vector<std::string> items;
  out.columns = {"index", "generator", "provenance"};
  if (source.path_n) out.columns.push_back("branch");
  for (std::size_t k = 0; k < rl.size(); ++k) {
    const auto m = render(rl[k], alphabet);
    items.push_back("u" + std::to_string(k + 1) + "=" + m);
    std::vector<std::string> row{"u" + std::to_string(k + 1), m, rl.provenance(k)};
    if (source.path_n) {
      row.push_back(rl.provenance(k).size() >= 2 ? std::string(1, to_char(path_branch(rl, k))) : "");
    }
    out.rows.push_back(std::move(row));
  }
  out.preamble.push_back(join(items, ", "));
  for (const auto& note : rl.notes()) out.preamble.push_back("note: " + note);
  return out;
}

Listing cmd_power(const Source& source, unsigned s, const PowerLimits& limits) {
  if (s == 0) throw std::invalid_argument("power: --s must be at least 1");
  const auto rl = rooted_list_for(source);
  const auto alphabet = rl.graph().alphabet();
  const auto p = power(rl, s, limits);
  Listing out;
  out.kind = "power";
  out.meta = {{"s", s},
              {"generators", rl.size()},
              {"products", p.all_products().size()},
              {"minimal", p.minimal_generators().size()},
              {"non_minimal", p.non_minimal().size()}};
  if (source.path_n) {
    out.meta["path"] = *source.path_n;
  } else {
    out.meta["graph"] = graph_json(rl.graph());
    out.meta["strategy"] = source.strategy.name();
  }
  out.columns = {"rank", "product", "minimal"};
  const auto* op = p.ordered();
  if (op) {
    out.columns.push_back("expressions");
    out.columns.push_back("divisible_by");
    const auto cert = check_linear_quotients(p.minimal_generators());
    out.meta["linear_quotients"] = cert.passed;
    out.preamble.push_back("G(I^2) in rooted order, " + std::to_string(p.minimal_generators().size()) +
                           " generators; linear quotients: " + (cert.passed ? "yes" : "no"));
    if (cert.witness) {
      out.preamble.push_back("first non-linear colon " + render(cert.witness->colon, alphabet) +
                             " at r = " + std::to_string(cert.witness->r));
    }
  }
  for (std::size_t k = 0; k < p.all_products().size(); ++k) {
    std::vector<std::string> row{std::to_string(k + 1), render(p.all_products()[k], alphabet),
                                 p.is_minimal(k) ? "yes" : "no"};
    if (op) {
      Expressions e;
      for (const auto& x : op->expressions(k)) e.emplace_back(x.i + 1, x.j + 1);
      row.push_back(render_expressions(e));
      std::string divisor;
      if (!p.is_minimal(k)) {
        try {
          const auto d = earlier_divisor(p.all_products()[k], p);
          const auto& m = op->maximal(*op->rank_of(d));
          divisor = render_pair({m.i + 1, m.j + 1});
        } catch (const PropertyViolation&) {
          divisor = "none above";
        }
      }
      row.push_back(divisor);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace coverq::cli
