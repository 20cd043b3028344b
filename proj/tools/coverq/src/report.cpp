#include "coverq_cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "coverq/error.hpp"

namespace coverq::cli {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Error:
      return "error";
    case Verdict::Finding:
      return "finding";
  }
  return "error";
}

Verdict parse_verdict(std::string_view name) {
  for (auto v : {Verdict::Pass, Verdict::Fail, Verdict::Error, Verdict::Finding}) {
    if (verdict_name(v) == name) return v;
  }
  throw ParseError(0, "unknown verdict '" + std::string(name) + "'");
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CaseRecord& c) { return c.verdict == Verdict::Pass; }));
}

std::size_t SuiteReport::failed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) {
    return c.verdict == Verdict::Fail || c.verdict == Verdict::Error;
  }));
}

std::string SuiteReport::status() const {
  if (failed() > 0) return "fail";
  if (!findings.empty()) return "attention";
  return "pass";
}

int exit_code(const SuiteReport& r) {
  const auto s = r.status();
  if (s == "fail") return 1;
  if (s == "attention") return 2;
  return 0;
}

json to_json(const SuiteReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    json e{{"group", c.group},
           {"instance", c.instance},
           {"verdict", verdict_name(c.verdict)},
           {"detail", c.detail}};
    if (c.seconds) e["seconds"] = *c.seconds;
    cases.push_back(std::move(e));
  }
  json findings = json::array();
  for (const auto& f : r.findings) {
    findings.push_back({{"instance", f.instance},
                        {"strategy", f.strategy},
                        {"kind", f.kind},
                        {"graph", f.graph},
                        {"certificate", f.certificate}});
  }
  return {{"suite", r.suite},
          {"parameters", r.parameters},
          {"cases", std::move(cases)},
          {"findings", std::move(findings)},
          {"summary",
           {{"passed", r.passed()},
            {"failed", r.failed()},
            {"findings", r.findings.size()},
            {"status", r.status()}}}};
}

SuiteReport report_from_json(const json& j) {
  try {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.parameters = j.at("parameters");
    for (const auto& e : j.at("cases")) {
      CaseRecord c;
      c.group = e.at("group").get<std::string>();
      c.instance = e.at("instance").get<std::string>();
      c.verdict = parse_verdict(e.at("verdict").get<std::string>());
      c.detail = e.at("detail").get<std::string>();
      if (e.contains("seconds")) c.seconds = e.at("seconds").get<double>();
      r.cases.push_back(std::move(c));
    }
    for (const auto& e : j.at("findings")) {
      r.findings.push_back({e.at("instance").get<std::string>(), e.at("strategy").get<std::string>(),
                            e.at("kind").get<std::string>(), e.at("graph"), e.at("certificate")});
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

json to_json(const Listing& l) {
  return {{"kind", l.kind}, {"meta", l.meta}, {"columns", l.columns}, {"rows", l.rows}};
}

namespace {

std::string tsv_cell(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n'; }, ' ');
  return s;
}

std::string tsv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out += '\t';
    out += tsv_cell(cells[k]);
  }
  return out + "\n";
}

std::string aligned(const std::vector<std::string>& columns,
                    const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += cells[c];
      if (c + 1 < cells.size()) out += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out.erase(out.find_last_not_of(' ') + 1);
    return out + "\n";
  };
  std::string out = line(columns);
  for (const auto& row : rows) out += line(row);
  return out;
}

std::string summary_line(const SuiteReport& r) {
  return r.suite + ": " + std::to_string(r.passed()) + " passed, " + std::to_string(r.failed()) +
         " failed, " + std::to_string(r.findings.size()) + " findings, status " + r.status() + "\n";
}

}  // namespace

std::string render(const SuiteReport& r, Format f) {
  switch (f) {
    case Format::Json:
      return to_json(r).dump(2) + "\n";
    case Format::Tsv: {
      std::string out = "# " + tsv_cell(summary_line(r).substr(0, summary_line(r).size() - 1)) + "\n";
      const bool timed = std::any_of(r.cases.begin(), r.cases.end(),
                                     [](const CaseRecord& c) { return c.seconds.has_value(); });
      std::vector<std::string> head{"group", "instance", "verdict", "detail"};
      if (timed) head.push_back("seconds");
      out += tsv_line(head);
      for (const auto& c : r.cases) {
        std::vector<std::string> cells{c.group, c.instance, std::string(verdict_name(c.verdict)),
                                       c.detail};
        if (timed) {
          std::ostringstream s;
          if (c.seconds) s << *c.seconds;
          cells.push_back(s.str());
        }
        out += tsv_line(cells);
      }
      for (const auto& fd : r.findings) {
        out += tsv_line({"finding", fd.instance, fd.strategy, fd.kind + " " + fd.certificate.dump()});
      }
      return out;
    }
    case Format::Text: {
      std::string out;
      for (const auto& c : r.cases) {
        std::string verdict(verdict_name(c.verdict));
        std::transform(verdict.begin(), verdict.end(), verdict.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
        out += verdict + "  " + c.group + "  " + c.instance;
        if (!c.detail.empty()) out += "  " + c.detail;
        if (c.seconds) {
          std::ostringstream s;
          s.precision(3);
          s << std::fixed << *c.seconds;
          out += "  (" + s.str() + "s)";
        }
        out += "\n";
      }
      for (const auto& fd : r.findings) {
        out += "FINDING  " + fd.instance + "  " + fd.strategy + "  " + fd.kind + "\n";
        out += "  graph: " + fd.graph.dump() + "\n";
        out += "  certificate: " + fd.certificate.dump() + "\n";
      }
      return out + summary_line(r);
    }
  }
  return {};
}

std::string render(const Listing& l, Format f) {
  switch (f) {
    case Format::Json:
      return to_json(l).dump(2) + "\n";
    case Format::Tsv: {
      std::string out = tsv_line(l.columns);
      for (const auto& row : l.rows) out += tsv_line(row);
      return out;
    }
    case Format::Text: {
      std::string out;
      for (const auto& p : l.preamble) out += p + "\n";
      if (!l.preamble.empty()) out += "\n";
      return out + aligned(l.columns, l.rows);
    }
  }
  return {};
}

}  // namespace coverq::cli
