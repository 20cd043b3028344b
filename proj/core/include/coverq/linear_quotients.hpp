#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coverq/monomial.hpp"

namespace coverq {

/// Minimal generators of (u_1, ..., u_{r-1}) : (u_r), r being 1-based.
struct QuotientStep {
  std::size_t r = 0;
  std::vector<Monomial> colons;  // canonical order
  bool all_degree_one = false;

  friend bool operator==(const QuotientStep&, const QuotientStep&) = default;
};

struct QuotientWitness {
  std::size_t r = 0;
  Monomial colon;

  friend bool operator==(const QuotientWitness&, const QuotientWitness&) = default;
};

/// Outcome of checking an order for linear quotients. A failing order is a
/// verdict, not an error; `witness` names the first offending colon.
struct QuotientCertificate {
  std::vector<Monomial> order;
  std::vector<QuotientStep> steps;  // r = 2 .. order.size()
  bool passed = false;
  std::optional<QuotientWitness> witness;

  friend bool operator==(const QuotientCertificate&, const QuotientCertificate&) = default;
};

/// Minimal generators of the colon ideal (order[0..r-1)) : (order[r]) for a
/// 0-based r >= 1.
std::vector<Monomial> colon_generators(std::span<const Monomial> order, std::size_t r);

/// Throws std::invalid_argument when the order has duplicates.
QuotientCertificate check_linear_quotients(std::span<const Monomial> order);

}  // namespace coverq
