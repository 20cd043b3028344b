#include "coverq_cli/tables.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "coverq/error.hpp"
#include "coverq/minimality.hpp"

namespace coverq::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

IndexPair parse_pair(const std::string& text, std::size_t line) {
  static const std::regex re(R"(u(\d+)(?:\^2|u(\d+)))");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError(line, "bad product '" + text + "'");
  const std::size_t i = std::stoul(m[1]);
  const std::size_t j = m[2].matched ? std::stoul(m[2]) : i;
  return {i, j};
}

Expressions parse_expressions(const std::string& text, std::size_t line) {
  Expressions out;
  for (const auto& part : split(text, '=')) out.push_back(parse_pair(part, line));
  return out;
}

Expressions expressions_at(const OrderedPower& op, std::size_t rank) {
  Expressions out;
  for (const auto& e : op.expressions(rank)) out.emplace_back(e.i + 1, e.j + 1);
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

}  // namespace

std::string render_pair(const IndexPair& p) {
  if (p.first == p.second) return "u" + std::to_string(p.first) + "^2";
  return "u" + std::to_string(p.first) + "u" + std::to_string(p.second);
}

std::string render_expressions(const Expressions& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) out += (k ? "=" : "") + render_pair(e[k]);
  return out;
}

TableFixture parse_table_fixture(std::string_view text) {
  TableFixture out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = split(line, '|');
    std::istringstream head(fields[0]);
    std::string kind;
    std::size_t n = 0;
    if (!(head >> kind >> n) || n < 2) throw ParseError(number, "expected `rooted <n>` or `square <n>`");
    if (kind == "rooted") {
      if (fields.size() != 2) throw ParseError(number, "rooted rows have two fields");
      RootedRow row{n, {}};
      const auto alphabet = Alphabet::indexed(n);
      std::size_t expected = 1;
      for (const auto& item : split(fields[1], ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || trim(item.substr(0, eq)) != "u" + std::to_string(expected)) {
          throw ParseError(number, "expected u" + std::to_string(expected) + "=<monomial>");
        }
        row.entries.push_back(parse_monomial(trim(item.substr(eq + 1)), alphabet));
        ++expected;
      }
      out.rooted[n] = std::move(row);
      out.rooted_text[n] = trim(line);
    } else if (kind == "square") {
      if (fields.size() != 3) throw ParseError(number, "square rows have three fields");
      SquareRow row{n, {}, {}};
      for (const auto& item : split(fields[1], ',')) {
        row.generators.push_back(parse_expressions(item, number));
      }
      if (!fields[2].empty()) {
        static const std::regex group_re(R"((.*)\(divisible by ([^)]*)\))");
        for (const auto& group : split(fields[2], ';')) {
          std::smatch m;
          if (!std::regex_match(group, m, group_re)) {
            throw ParseError(number, "expected `<products> (divisible by <product>)`");
          }
          DivisorGroup g;
          for (const auto& item : split(trim(m[1].str()), ',')) {
            g.members.push_back(parse_expressions(item, number));
          }
          g.divisor = parse_expressions(trim(m[2].str()), number);
          row.non_minimal.push_back(std::move(g));
        }
      }
      out.square[n] = std::move(row);
      out.square_text[n] = trim(line);
    } else {
      throw ParseError(number, "unknown row kind '" + kind + "'");
    }
  }
  return out;
}

const TableFixture& embedded_tables() {
  static const TableFixture fixture = parse_table_fixture(embedded_tables_text());
  return fixture;
}

RootedRow rooted_row(const RootedList& path_list) {
  return {path_list.graph().vertex_count(),
          std::vector<Monomial>(path_list.entries().begin(), path_list.entries().end())};
}

SquareRow square_row(const PowerIdeal& second_power) {
  const auto& op = second_power.second_power_order();
  SquareRow row{second_power.base().front().alphabet(), {}, {}};
  for (std::size_t r = 0; r < op.size(); ++r) {
    if (second_power.is_minimal(r)) {
      row.generators.push_back(expressions_at(op, r));
      continue;
    }
    const auto divisor = earlier_divisor(op.value(r), second_power);
    const auto divisor_expr = expressions_at(op, *op.rank_of(divisor));
    if (row.non_minimal.empty() || row.non_minimal.back().divisor != divisor_expr) {
      row.non_minimal.push_back({{}, divisor_expr});
    }
    row.non_minimal.back().members.push_back(expressions_at(op, r));
  }
  return row;
}

std::string render_row(const RootedRow& row) {
  const auto alphabet = Alphabet::indexed(row.n);
  std::vector<std::string> items;
  for (std::size_t k = 0; k < row.entries.size(); ++k) {
    items.push_back("u" + std::to_string(k + 1) + "=" + render(row.entries[k], alphabet));
  }
  return "rooted " + std::to_string(row.n) + " | " + join(items, ", ");
}

namespace {

std::string render_groups(const std::vector<DivisorGroup>& groups) {
  std::vector<std::string> parts;
  for (const auto& g : groups) {
    std::vector<std::string> members;
    for (const auto& e : g.members) members.push_back(render_expressions(e));
    parts.push_back(join(members, ", ") + " (divisible by " + render_expressions(g.divisor) + ")");
  }
  return join(parts, "; ");
}

}  // namespace

std::string render_row(const SquareRow& row) {
  std::vector<std::string> gens;
  for (const auto& e : row.generators) gens.push_back(render_expressions(e));
  std::string out = "square " + std::to_string(row.n) + " | " + join(gens, ", ") + " |";
  if (!row.non_minimal.empty()) out += " " + render_groups(row.non_minimal);
  return out;
}

std::optional<std::string> first_difference(const RootedRow& want, const RootedRow& got) {
  const auto alphabet = Alphabet::indexed(std::max(want.n, got.n));
  const auto count = std::max(want.entries.size(), got.entries.size());
  for (std::size_t k = 0; k < count; ++k) {
    const auto w = k < want.entries.size() ? render(want.entries[k], alphabet) : "(none)";
    const auto g = k < got.entries.size() ? render(got.entries[k], alphabet) : "(none)";
    if (w != g) return "u" + std::to_string(k + 1) + ": expected " + w + ", got " + g;
  }
  return std::nullopt;
}

std::optional<std::string> first_difference(const SquareRow& want, const SquareRow& got) {
  const auto count = std::max(want.generators.size(), got.generators.size());
  for (std::size_t k = 0; k < count; ++k) {
    const auto w = k < want.generators.size() ? render_expressions(want.generators[k]) : "(none)";
    const auto g = k < got.generators.size() ? render_expressions(got.generators[k]) : "(none)";
    if (w != g) {
      return "generator " + std::to_string(k + 1) + ": expected " + w + ", got " + g;
    }
  }
  if (want.non_minimal != got.non_minimal) {
    return "non-minimal products: expected '" + render_groups(want.non_minimal) + "', got '" +
           render_groups(got.non_minimal) + "'";
  }
  return std::nullopt;
}

std::optional<std::string> first_difference(std::string_view want, std::string_view got) {
  const auto limit = std::min(want.size(), got.size());
  std::size_t k = 0;
  while (k < limit && want[k] == got[k]) ++k;
  if (k == want.size() && k == got.size()) return std::nullopt;
  return "text differs at column " + std::to_string(k + 1) + ": expected '" +
         std::string(want.substr(k, 24)) + "', got '" + std::string(got.substr(k, 24)) + "'";
}

}  // namespace coverq::cli
