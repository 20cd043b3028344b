#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coverq_cli/config.hpp"
#include "json.hpp"

namespace coverq::cli {

using json = nlohmann::json;

enum class Verdict { Pass, Fail, Error, Finding };

std::string_view verdict_name(Verdict v);
Verdict parse_verdict(std::string_view name);

struct CaseRecord {
  std::string group;
  std::string instance;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::optional<double> seconds;

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

/// A chordal instance whose rooted order failed linear quotients.
struct Finding {
  std::string instance;
  std::string strategy;
  std::string kind;
  json graph;
  json certificate;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct SuiteReport {
  std::string suite;
  json parameters = json::object();
  std::vector<CaseRecord> cases;
  std::vector<Finding> findings;

  std::size_t passed() const;
  /// Fail and Error verdicts.
  std::size_t failed() const;
  /// "fail" when a case failed, else "attention" when there are findings,
  /// else "pass".
  std::string status() const;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// 0 pass, 1 failure, 2 findings only.
int exit_code(const SuiteReport& r);

json to_json(const SuiteReport& r);
SuiteReport report_from_json(const json& j);

/// Tabular output of the listing commands (covers, rooted, power).
struct Listing {
  std::string kind;
  json meta = json::object();
  /// Extra lines printed before the table in text mode only.
  std::vector<std::string> preamble;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

json to_json(const Listing& l);

std::string render(const SuiteReport& r, Format f);
std::string render(const Listing& l, Format f);

}  // namespace coverq::cli
