#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coverq/graph.hpp"
#include "coverq/power.hpp"
#include "coverq/rooted_list.hpp"

namespace coverq {

/// One failed assertion with enough context to reproduce it.
struct Violation {
  std::string check;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using Violations = std::vector<Violation>;

// Structural checks on R(P_n), F(J(P_n)^2) and G(J(P_n)^2). Each returns the
// violations found (empty on success), capped at a handful per call.
namespace checks {

Violations path_oracle(std::size_t n);
Violations chordal_oracle(const Graph& g, const PivotStrategy& strategy);
Violations first_power_quotients(std::size_t n);
Violations second_power_quotients(std::size_t n, const PowerLimits& limits = {});
Violations earlier_divisors(std::size_t n, const PowerLimits& limits = {});
/// Closed form of a_n against R(P_n) and its recursion; reg(J(P_n)^2)
/// against G(J(P_n)^2) when `with_second_power`.
Violations regularity(std::size_t n, bool with_second_power, const PowerLimits& limits = {});
/// Monotone divisibility by x_n and x_{n-2}, the prefix decomposition via
/// R(P_{n-1}), the colon (x_{n-1}) at the first entry avoiding x_{n-1}, and
/// the existence of a J(P_{n-2}) generator inside u / x_n.
Violations rooted_structure(std::size_t n);
/// Order and maximal-expression preservation under the embeddings
/// x_{n-1} R(P_{n-2}) and x_n x_{n-2} R(P_{n-3}), on F(J^2) as well.
Violations order_preservation(std::size_t n);
/// Minimality and order transfer under x_{n-1}^2, x_n^2 x_{n-2}^2 and the
/// A*C and B*C products.
Violations scaling(std::size_t n);
/// Divisors u'v' of u*v with u in A (or B) and v in C stay in the same
/// branches.
Violations divisor_branches(std::size_t n);
/// Sufficient non-minimality condition, the colon-variable dichotomy and
/// minimality of pure powers.
Violations nonminimality(std::size_t n, const PowerLimits& limits = {});
/// The rooted comparator is a strict total order, the index rule matches a
/// literal lex comparison of exponent vectors, and OrderedPower agrees with
/// rooted_compare.
Violations total_order(std::size_t n);

}  // namespace checks

enum class Suite {
  OracleEquality,
  FirstPower,
  SecondPower,
  EarlierDivisor,
  Regularity,
  RootedStructure,
  OrderPreservation,
  Scaling,
  DivisorBranches,
  Nonminimality,
  TotalOrder,
};

struct SuiteInfo {
  Suite id;
  std::string_view name;
  std::size_t min_n;
  /// Largest n the suite runs by default; the exhaustive checks grow fast.
  std::size_t cap;
  std::string_view summary;
};

std::span<const SuiteInfo> suite_catalog();
const SuiteInfo& suite_info(Suite s);
std::optional<Suite> suite_from_name(std::string_view name);

struct VerifyOptions {
  PowerLimits limits;
  bool uncapped = false;
  std::size_t chordal_samples = 200;
  std::size_t chordal_max_vertices = 12;
  std::uint64_t chordal_seed = 20240601;
};

/// One unit of work in a suite: a path size, or one sampled chordal graph.
struct SuiteCase {
  Suite suite;
  std::size_t n = 0;
  std::optional<std::size_t> sample;

  std::string id() const;
};

struct CaseOutcome {
  SuiteCase which;
  Violations violations;
  std::optional<std::string> error;  // guard refusal or unexpected exception

  bool passed() const noexcept { return violations.empty() && !error; }
};

std::vector<SuiteCase> plan_suite(Suite s, std::size_t max_n, const VerifyOptions& options);
CaseOutcome run_case(const SuiteCase& c, const VerifyOptions& options);

/// Graph and strategies used for chordal sample k.
Graph chordal_sample_graph(std::size_t k, const VerifyOptions& options);
std::vector<PivotStrategy> sample_strategies(const Graph& g, std::uint64_t seed);

/// splitmix64 step; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// A uniformly shuffled priority over g's labels.
PivotStrategy shuffled_strategy(const Graph& g, std::uint64_t seed);

}  // namespace coverq
