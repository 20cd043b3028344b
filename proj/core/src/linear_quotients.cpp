#include "coverq/linear_quotients.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace coverq {

std::vector<Monomial> colon_generators(std::span<const Monomial> order, std::size_t r) {
  if (r == 0 || r >= order.size()) throw std::out_of_range("colon_generators: bad index");
  const Monomial& target = order[r];

  // Variables among the colons generate everything they divide, so only the
  // colons avoiding every such variable need a full minimalization.
  std::uint64_t variables = 0;
  std::vector<Monomial> rest;
  for (std::size_t k = 0; k < r; ++k) {
    Monomial c = colon(order[k], target);
    const unsigned d = c.degree();
    if (d == 0) return {std::move(c)};  // the unit generates the whole ring
    if (d == 1) {
      variables |= c.support();
    } else {
      rest.push_back(std::move(c));
    }
  }
  std::vector<Monomial> out;
  for (std::size_t v = 0; v < target.alphabet(); ++v) {
    if ((variables >> v) & 1U) out.push_back(Monomial::variable(target.alphabet(), v));
  }
  std::vector<Monomial> survivors;
  for (auto& c : rest) {
    if ((c.support() & variables) == 0) survivors.push_back(std::move(c));
  }
  const auto reduced = minimalize(survivors);
  out.insert(out.end(), reduced.begin(), reduced.end());
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

QuotientCertificate check_linear_quotients(std::span<const Monomial> order) {
  std::unordered_set<Monomial, MonomialHash> seen;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (!seen.insert(order[k]).second) {
      throw std::invalid_argument("check_linear_quotients: duplicate generator at position " +
                                  std::to_string(k + 1));
    }
  }

  QuotientCertificate cert;
  cert.order.assign(order.begin(), order.end());
  cert.passed = true;
  for (std::size_t r = 1; r < order.size(); ++r) {
    QuotientStep step;
    step.r = r + 1;
    step.colons = colon_generators(order, r);
    step.all_degree_one = std::all_of(step.colons.begin(), step.colons.end(),
                                      [](const Monomial& c) { return c.degree() == 1; });
    if (!step.all_degree_one && cert.passed) {
      cert.passed = false;
      const auto bad = std::find_if(step.colons.begin(), step.colons.end(),
                                    [](const Monomial& c) { return c.degree() != 1; });
      cert.witness = QuotientWitness{step.r, *bad};
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

}  // namespace coverq
