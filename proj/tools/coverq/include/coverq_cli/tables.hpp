#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coverq/monomial.hpp"
#include "coverq/power.hpp"
#include "coverq/rooted_list.hpp"

namespace coverq::cli {

/// (i, j) with 1-based positions into R(P_n), i <= j.
using IndexPair = std::pair<std::size_t, std::size_t>;
/// All expressions of one product, maximal first.
using Expressions = std::vector<IndexPair>;

struct DivisorGroup {
  std::vector<Expressions> members;
  Expressions divisor;

  friend bool operator==(const DivisorGroup&, const DivisorGroup&) = default;
};

struct RootedRow {
  std::size_t n = 0;
  std::vector<Monomial> entries;

  friend bool operator==(const RootedRow&, const RootedRow&) = default;
};

struct SquareRow {
  std::size_t n = 0;
  std::vector<Expressions> generators;
  std::vector<DivisorGroup> non_minimal;

  friend bool operator==(const SquareRow&, const SquareRow&) = default;
};

struct TableFixture {
  std::map<std::size_t, RootedRow> rooted;
  std::map<std::size_t, SquareRow> square;
  /// Fixture lines verbatim, for the byte-exact check.
  std::map<std::size_t, std::string> rooted_text;
  std::map<std::size_t, std::string> square_text;
};

/// Throws ParseError with the line number.
TableFixture parse_table_fixture(std::string_view text);
/// The fixture compiled into the binary.
const TableFixture& embedded_tables();
std::string_view embedded_tables_text();

RootedRow rooted_row(const RootedList& path_list);
/// Non-minimal products are grouped, in rooted order, by their top-ranked
/// minimal divisor.
SquareRow square_row(const PowerIdeal& second_power);

/// u1u3, u2^2, or u3u6=u4u5 for coinciding products.
std::string render_pair(const IndexPair& p);
std::string render_expressions(const Expressions& e);

std::string render_row(const RootedRow& row);
std::string render_row(const SquareRow& row);

/// Description of the first difference, or nullopt when equal.
std::optional<std::string> first_difference(const RootedRow& want, const RootedRow& got);
std::optional<std::string> first_difference(const SquareRow& want, const SquareRow& got);
std::optional<std::string> first_difference(std::string_view want, std::string_view got);

}  // namespace coverq::cli
