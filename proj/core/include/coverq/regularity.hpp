#pragma once

#include <cstddef>
#include <span>

#include "coverq/monomial.hpp"

namespace coverq {

/// Maximum degree of a minimal generator of J(P_n): 2k for n = 3k or 3k+1,
/// 2k+1 for n = 3k+2. Requires n >= 2.
unsigned max_generator_degree_path(std::size_t n);

/// reg(J(P_n)^2): 4k for n = 3k or 3k+1, 4k+2 for n = 3k+2. Requires n >= 2.
unsigned regularity_second_power_path(std::size_t n);

/// Largest total degree in a generating set (0 for an empty set).
unsigned max_degree(std::span<const Monomial> generators);

}  // namespace coverq
