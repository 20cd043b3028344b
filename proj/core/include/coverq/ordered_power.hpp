#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coverq/monomial.hpp"
#include "coverq/rooted_list.hpp"

namespace coverq {

/// u_i * u_j with i <= j (0-based positions in a rooted list).
struct TwoFoldExpression {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial value;

  friend bool operator==(const TwoFoldExpression&, const TwoFoldExpression&) = default;
};

/// Lex order of the exponent vectors (a_1..a_q) of two expressions. Larger
/// means the expression with more weight on earlier generators, which for
/// 2-fold products reduces to: smaller i wins, then smaller j.
std::strong_ordering compare_expressions(const TwoFoldExpression& a, const TwoFoldExpression& b);

/// Lex-greatest factorization of m as a product of two entries of `base`.
/// Throws std::invalid_argument when m is not a 2-fold product.
TwoFoldExpression maximal_expression(const Monomial& m, std::span<const Monomial> base);
TwoFoldExpression maximal_expression(const Monomial& m, const RootedList& rl);

/// Rooted order on F(I^2): std::strong_ordering::greater when m1 ranks above
/// m2 (its maximal expression is lex-greater). Throws for non-members.
std::strong_ordering rooted_compare(const Monomial& m1, const Monomial& m2,
                                    std::span<const Monomial> base);
std::strong_ordering rooted_compare(const Monomial& m1, const Monomial& m2,
                                    const RootedList& rl);

/// All 2-fold products of a generator list, grouped by value and sorted
/// from the top of the rooted order down. Rank 0 is u_1^2.
class OrderedPower {
 public:
  std::span<const Monomial> base() const noexcept { return base_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t pair_count() const noexcept;

  std::span<const Monomial> sorted_values() const noexcept { return values_; }
  const Monomial& value(std::size_t rank) const { return values_.at(rank); }
  /// Every factorization of the value at `rank`, maximal first.
  std::span<const TwoFoldExpression> expressions(std::size_t rank) const {
    return expressions_.at(rank);
  }
  const TwoFoldExpression& maximal(std::size_t rank) const { return expressions_.at(rank).front(); }
  std::optional<std::size_t> rank_of(const Monomial& m) const;

  /// Same contract as rooted_compare, answered from the precomputed ranks.
  std::strong_ordering compare(const Monomial& m1, const Monomial& m2) const;

 private:
  friend OrderedPower ordered_power(std::span<const Monomial> base);

  std::vector<Monomial> base_;
  std::vector<Monomial> values_;
  std::vector<std::vector<TwoFoldExpression>> expressions_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> rank_;
};

OrderedPower ordered_power(std::span<const Monomial> base);
OrderedPower ordered_power(const RootedList& rl);

}  // namespace coverq
