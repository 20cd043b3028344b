#include "coverq/minimality.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverq/error.hpp"
#include "coverq/linear_quotients.hpp"

namespace coverq {

std::optional<TwoFoldExpression> nonminimality_witness(const Monomial& u, const Monomial& v,
                                                       const PowerIdeal& second_power) {
  const std::size_t n = u.alphabet();
  if (n < 5) throw std::invalid_argument("nonminimality_witness: needs a path on >= 5 vertices");
  const auto base = second_power.base();
  if (std::find(base.begin(), base.end(), u) == base.end() ||
      std::find(base.begin(), base.end(), v) == base.end()) {
    throw std::invalid_argument("nonminimality_witness: u and v must be generators");
  }
  // 0-based: x_n -> n-1, x_{n-1} -> n-2, x_{n-3} -> n-4, x_{n-4} -> n-5.
  if (!(u[n - 2] && u[n - 5] && v[n - 1] && v[n - 4])) return std::nullopt;

  const auto& op = second_power.second_power_order();
  const Monomial product = u * v;
  const auto rank = op.rank_of(product);
  for (std::size_t k = 0; k < *rank; ++k) {
    if (strictly_divides(op.value(k), product)) return op.maximal(k);
  }
  throw PropertyViolation("no higher-ranked 2-fold product strictly divides u*v");
}

ColonVariableCheck check_colon_variable(std::size_t i, std::size_t j,
                                        const PowerIdeal& second_power) {
  const auto base = second_power.base();
  if (!(0 < i && i < j && j < base.size())) {
    throw std::out_of_range("check_colon_variable: need 0 < i < j < q");
  }
  ColonVariableCheck out;
  for (const auto& c : colon_generators(base, i)) {
    if (c.degree() != 1) continue;
    const auto var = static_cast<std::size_t>(std::countr_zero(c.support()));
    if (base[j][var] > 0) {
      out.applies = true;
      out.variable = var;
      break;
    }
  }
  const auto& op = second_power.second_power_order();
  const Monomial product = base[i] * base[j];
  const auto rank = *op.rank_of(product);
  out.product_minimal = second_power.is_minimal(rank);
  out.expression_maximal = op.maximal(rank).i == i && op.maximal(rank).j == j;
  return out;
}

Monomial earlier_divisor(const Monomial& U, const PowerIdeal& second_power) {
  const auto& op = second_power.second_power_order();
  const auto rank = op.rank_of(U);
  if (!rank || second_power.is_minimal(*rank)) {
    throw std::invalid_argument("earlier_divisor: U must lie in F(I^2) \\ G(I^2)");
  }
  for (std::size_t k = 0; k < *rank; ++k) {
    if (second_power.is_minimal(k) && divides(op.value(k), U)) return op.value(k);
  }
  throw PropertyViolation("no minimal generator ranked above U divides it");
}

bool pure_power_is_minimal(const Monomial& u, std::span<const Monomial> generators, unsigned s) {
  if (s == 0) throw std::invalid_argument("pure_power_is_minimal: s must be at least 1");
  if (std::find(generators.begin(), generators.end(), u) == generators.end()) {
    throw std::invalid_argument("pure_power_is_minimal: u is not a generator");
  }
  const Monomial target = pow(u, s);
  std::vector<Monomial> candidates;
  for (const auto& g : generators) {
    if (divides(g, target)) candidates.push_back(g);
  }
  std::vector<std::size_t> idx(s, 0);
  while (true) {
    Monomial m(u.alphabet());
    for (auto k : idx) m *= candidates[k];
    if (strictly_divides(m, target)) return false;
    std::size_t pos = s;
    while (pos > 0 && idx[pos - 1] == candidates.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < s; ++k) idx[k] = idx[pos - 1];
  }
  return true;
}

}  // namespace coverq
