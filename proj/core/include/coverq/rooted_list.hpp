#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coverq/graph.hpp"
#include "coverq/monomial.hpp"

namespace coverq {

/// An ordered list of the minimal generators of J(G) produced by the
/// recursive simplicial-vertex construction. Entry k ranks above entry l
/// whenever k < l.
///
/// Each entry carries the branch path that produced it. For paths the path
/// is a string over {L, R}: L for the x_{n-1} R(P_{n-2}) half of a level and
/// R for the x_n x_{n-2} R(P_{n-3}) half. For chordal graphs it is the list
/// of chosen neighbors v_i, one per recursion level, joined with '>'.
class RootedList {
 public:
  RootedList() = default;
  RootedList(Graph graph, std::vector<Monomial> entries, std::vector<std::string> provenance,
             std::vector<std::string> notes = {});

  const Graph& graph() const noexcept { return graph_; }
  std::span<const Monomial> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Monomial& operator[](std::size_t k) const { return entries_.at(k); }
  const std::string& provenance(std::size_t k) const { return provenance_.at(k); }
  std::span<const std::string> provenance() const noexcept { return provenance_; }
  /// Construction remarks, e.g. dropped duplicate entries.
  std::span<const std::string> notes() const noexcept { return notes_; }
  /// Position of m in the list, if present.
  std::optional<std::size_t> position(const Monomial& m) const;

 private:
  Graph graph_;
  std::vector<Monomial> entries_;
  std::vector<std::string> provenance_;
  std::vector<std::string> notes_;
};

/// R(P_n) for the path x1 - ... - xn, n >= 2.
RootedList rooted_list_path(std::size_t n);

/// Sublists of R(P_n) used by the divisor and non-minimality checks (all four
/// are nonempty from n = 7): A = x_{n-1} x_{n-3} R(P_{n-4}),
/// B = x_{n-1} x_{n-2} x_{n-4} R(P_{n-5}), C = x_n x_{n-2} x_{n-4} R(P_{n-5}),
/// D = x_n x_{n-2} x_{n-3} x_{n-5} R(P_{n-6}).
enum class PathBranch { A, B, C, D };
PathBranch path_branch(const RootedList& path_list, std::size_t k);
char to_char(PathBranch b);

/// How the chordal construction picks its pivot (a simplicial vertex) and
/// orders N[pivot]. The pivot always comes first.
///   Lowest:   earliest simplicial vertex in canonical order, neighbors ascending.
///   Highest:  latest simplicial vertex, neighbors descending.
///   Priority: earliest simplicial vertex in `priority`, neighbors by
///             priority. Unlisted labels rank after listed ones, in
///             canonical order.
class PivotStrategy {
 public:
  enum class Rule { Lowest, Highest, Priority };

  static PivotStrategy lowest() { return PivotStrategy(Rule::Lowest, {}); }
  static PivotStrategy highest() { return PivotStrategy(Rule::Highest, {}); }
  static PivotStrategy priority(std::vector<std::string> labels) {
    return PivotStrategy(Rule::Priority, std::move(labels));
  }

  Rule rule() const noexcept { return rule_; }
  std::span<const std::string> priority_labels() const noexcept { return priority_; }
  /// "lowest", "highest" or "explicit:a,b,c".
  std::string name() const;

  friend bool operator==(const PivotStrategy&, const PivotStrategy&) = default;

 private:
  PivotStrategy(Rule rule, std::vector<std::string> priority)
      : rule_(rule), priority_(std::move(priority)) {}

  Rule rule_;
  std::vector<std::string> priority_;
};

/// Rooted list of a chordal graph: pick a simplicial pivot v_1 with
/// N[v_1] = {v_1, ..., v_r}, then concatenate R(G \ N[v_i]) * N(v_i) for
/// i = 1..r. An edgeless graph contributes the unit monomial. Throws
/// NotChordal with a chordless cycle for non-chordal input.
RootedList rooted_list_chordal(const Graph& g,
                               const PivotStrategy& strategy = PivotStrategy::lowest());

}  // namespace coverq
