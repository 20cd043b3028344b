#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coverq/monomial.hpp"
#include "coverq/ordered_power.hpp"
#include "coverq/rooted_list.hpp"

namespace coverq {

/// Default ceiling on the estimated number of pairwise divisibility checks
/// needed to minimalize F(I^s). Covers J(P_18)^2 (about 6.6e7 checks).
inline constexpr std::uint64_t kDefaultMaxPairOps = 100'000'000;

struct PowerLimits {
  std::uint64_t max_pair_ops = kDefaultMaxPairOps;
};

/// C(q + s - 1, s): the number of s-fold products of q generators,
/// saturating at UINT64_MAX.
std::uint64_t count_products(std::uint64_t q, unsigned s);
/// Worst-case pairwise divisibility checks for minimalizing those products.
std::uint64_t estimate_power_ops(std::uint64_t q, unsigned s);

/// I^s for I given by an ordered generator list: every s-fold product F(I^s),
/// split into minimal generators G(I^s) and the rest.
///
/// Products keep a deterministic order: for s = 2 the rooted order (so
/// minimal_generators() is the rooted list of I^2), otherwise the order of
/// first appearance when multisets i_1 <= ... <= i_s are enumerated
/// lexicographically.
class PowerIdeal {
 public:
  std::span<const Monomial> base() const noexcept { return base_; }
  unsigned exponent() const noexcept { return s_; }

  std::span<const Monomial> all_products() const noexcept { return products_; }
  std::span<const Monomial> minimal_generators() const noexcept { return minimal_; }
  std::span<const Monomial> non_minimal() const noexcept { return non_minimal_; }
  /// Indexed like all_products().
  bool is_minimal(std::size_t k) const { return flags_.at(k) != 0; }
  std::optional<std::size_t> index_of(const Monomial& m) const;
  bool is_minimal_generator(const Monomial& m) const;

  /// Present for s = 2 only.
  const OrderedPower* ordered() const noexcept { return ordered_ ? &*ordered_ : nullptr; }
  /// Throws std::logic_error when s != 2.
  const OrderedPower& second_power_order() const;

 private:
  friend PowerIdeal power(std::span<const Monomial>, unsigned, const PowerLimits&);

  std::vector<Monomial> base_;
  unsigned s_ = 1;
  std::vector<Monomial> products_;
  std::vector<char> flags_;
  std::vector<Monomial> minimal_;
  std::vector<Monomial> non_minimal_;
  std::optional<OrderedPower> ordered_;
};

/// Throws GuardExceeded when estimate_power_ops exceeds the limit.
PowerIdeal power(std::span<const Monomial> generators, unsigned s, const PowerLimits& limits = {});
PowerIdeal power(const RootedList& rl, unsigned s, const PowerLimits& limits = {});

/// Flags (aligned with `distinct`) telling which elements no other element
/// strictly divides. Elements must be pairwise distinct.
std::vector<char> minimal_flags(std::span<const Monomial> distinct);

}  // namespace coverq
