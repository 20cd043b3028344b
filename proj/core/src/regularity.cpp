#include "coverq/regularity.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverq {

unsigned max_generator_degree_path(std::size_t n) {
  if (n < 2) throw std::invalid_argument("max_generator_degree_path: n must be at least 2");
  const auto k = static_cast<unsigned>(n / 3);
  return n % 3 == 2 ? 2 * k + 1 : 2 * k;
}

unsigned regularity_second_power_path(std::size_t n) {
  if (n < 2) throw std::invalid_argument("regularity_second_power_path: n must be at least 2");
  const auto k = static_cast<unsigned>(n / 3);
  return n % 3 == 2 ? 4 * k + 2 : 4 * k;
}

unsigned max_degree(std::span<const Monomial> generators) {
  unsigned best = 0;
  for (const auto& g : generators) best = std::max(best, g.degree());
  return best;
}

}  // namespace coverq
