#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "coverq/monomial.hpp"
#include "coverq/ordered_power.hpp"
#include "coverq/power.hpp"

namespace coverq {

/// For generators u, v of J(P_n) (n >= 5, path variables x1..xn) with
/// x_{n-1} x_{n-4} | u and x_n x_{n-3} | v, a 2-fold product p*w that
/// strictly divides uv and ranks above it. nullopt when the divisibility
/// precondition does not hold. `second_power` must be J(P_n)^2 built from
/// the rooted list. Throws PropertyViolation if the precondition holds but
/// no such product exists.
std::optional<TwoFoldExpression> nonminimality_witness(const Monomial& u, const Monomial& v,
                                                       const PowerIdeal& second_power);

/// Whether u_j contains a variable generator of (u_1..u_{i-1}) : (u_i), and
/// how the product u_i u_j then fails: not a minimal generator of I^2, or
/// (i, j) is not its maximal expression. Positions are 0-based, 0 < i < j.
struct ColonVariableCheck {
  bool applies = false;
  std::optional<std::size_t> variable;  // index of the shared variable
  bool product_minimal = false;
  bool expression_maximal = false;

  /// True unless the product is both minimal and maximally expressed while
  /// the colon variable divides u_j.
  bool holds() const noexcept { return !applies || !product_minimal || !expression_maximal; }
};

ColonVariableCheck check_colon_variable(std::size_t i, std::size_t j,
                                        const PowerIdeal& second_power);

/// The top-ranked minimal generator V of I^2 with V | U and V ranked above
/// U, for U in F(I^2) \ G(I^2). Throws PropertyViolation carrying U if there
/// is none, and std::invalid_argument if U is not a non-minimal product.
Monomial earlier_divisor(const Monomial& U, const PowerIdeal& second_power);

/// Whether u^s is a minimal generator of I^s where I = (generators).
/// Only generators dividing u^s can take part in a divisor, so the search
/// runs over s-multisets of those. Throws std::invalid_argument when u is not
/// one of the generators.
bool pure_power_is_minimal(const Monomial& u, std::span<const Monomial> generators, unsigned s);

}  // namespace coverq
