#include "coverq/ordered_power.hpp"

#include <stdexcept>

namespace coverq {

std::strong_ordering compare_expressions(const TwoFoldExpression& a, const TwoFoldExpression& b) {
  // Smaller indices carry more weight, so the ordering is reversed.
  if (a.i != b.i) return b.i <=> a.i;
  return b.j <=> a.j;
}

TwoFoldExpression maximal_expression(const Monomial& m, std::span<const Monomial> base) {
  // Pairs are scanned with i ascending, then j ascending, so the first hit is
  // the lex-greatest exponent vector.
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!divides(base[i], m)) continue;
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i] * base[j] == m) return {i, j, m};
    }
  }
  throw std::invalid_argument("maximal_expression: monomial is not a 2-fold product");
}

TwoFoldExpression maximal_expression(const Monomial& m, const RootedList& rl) {
  return maximal_expression(m, rl.entries());
}

std::strong_ordering rooted_compare(const Monomial& m1, const Monomial& m2,
                                    std::span<const Monomial> base) {
  if (m1 == m2) {
    maximal_expression(m1, base);  // membership check
    return std::strong_ordering::equal;
  }
  return compare_expressions(maximal_expression(m1, base), maximal_expression(m2, base));
}

std::strong_ordering rooted_compare(const Monomial& m1, const Monomial& m2,
                                    const RootedList& rl) {
  return rooted_compare(m1, m2, rl.entries());
}

std::size_t OrderedPower::pair_count() const noexcept {
  return base_.size() * (base_.size() + 1) / 2;
}

std::optional<std::size_t> OrderedPower::rank_of(const Monomial& m) const {
  auto it = rank_.find(m);
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

std::strong_ordering OrderedPower::compare(const Monomial& m1, const Monomial& m2) const {
  const auto r1 = rank_of(m1);
  const auto r2 = rank_of(m2);
  if (!r1 || !r2) throw std::invalid_argument("rooted order: monomial is not a 2-fold product");
  return *r2 <=> *r1;
}

OrderedPower ordered_power(std::span<const Monomial> base) {
  OrderedPower op;
  op.base_.assign(base.begin(), base.end());
  op.rank_.reserve(op.pair_count());
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      Monomial value = base[i] * base[j];
      auto [it, fresh] = op.rank_.try_emplace(value, op.values_.size());
      if (fresh) {
        op.values_.push_back(value);
        op.expressions_.emplace_back();
      }
      // Pairs arrive in lex-descending order, so the first expression
      // recorded for a value is its maximal one.
      op.expressions_[it->second].push_back({i, j, std::move(value)});
    }
  }
  return op;
}

OrderedPower ordered_power(const RootedList& rl) { return ordered_power(rl.entries()); }

}  // namespace coverq
