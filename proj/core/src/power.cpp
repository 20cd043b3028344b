#include "coverq/power.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "coverq/error.hpp"

namespace coverq {

namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

std::uint64_t count_products(std::uint64_t q, unsigned s) {
  if (q == 0) return s == 0 ? 1 : 0;
  // C(q+s-1, s) built incrementally; each partial value is itself a binomial.
  Wide c = 1;
  for (unsigned k = 1; k <= s; ++k) {
    c = c * (q - 1 + k) / k;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t estimate_power_ops(std::uint64_t q, unsigned s) {
  const Wide p = count_products(q, s);
  const Wide ops = p * (p > 0 ? p - 1 : 0) / 2;
  if (ops > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(ops);
}

std::vector<char> minimal_flags(std::span<const Monomial> distinct) {
  std::vector<std::size_t> order(distinct.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return distinct[a].degree() < distinct[b].degree();
  });
  std::vector<char> flags(distinct.size(), 0);
  std::vector<std::size_t> kept;
  for (auto k : order) {
    // Only a strictly lower degree element can strictly divide, and any
    // divisor is itself divisible by a kept (minimal) element.
    const auto& m = distinct[k];
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](std::size_t other) {
      return distinct[other].degree() < m.degree() && divides(distinct[other], m);
    });
    if (!covered) {
      flags[k] = 1;
      kept.push_back(k);
    }
  }
  return flags;
}

std::optional<std::size_t> PowerIdeal::index_of(const Monomial& m) const {
  if (ordered_) return ordered_->rank_of(m);
  auto it = std::find(products_.begin(), products_.end(), m);
  if (it == products_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - products_.begin());
}

bool PowerIdeal::is_minimal_generator(const Monomial& m) const {
  auto k = index_of(m);
  return k && is_minimal(*k);
}

const OrderedPower& PowerIdeal::second_power_order() const {
  if (!ordered_) throw std::logic_error("rooted order is only defined for second powers");
  return *ordered_;
}

namespace {

std::vector<Monomial> enumerate_products(std::span<const Monomial> gens, unsigned s) {
  std::vector<Monomial> out;
  std::unordered_map<Monomial, std::size_t, MonomialHash> seen;
  if (gens.empty()) return out;
  std::vector<std::size_t> idx(s, 0);
  while (true) {
    Monomial m(gens.front().alphabet());
    for (auto i : idx) m *= gens[i];
    if (seen.try_emplace(m, out.size()).second) out.push_back(std::move(m));
    // Next non-decreasing index tuple.
    std::size_t pos = s;
    while (pos > 0 && idx[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < s; ++k) idx[k] = idx[pos - 1];
  }
  return out;
}

}  // namespace

PowerIdeal power(std::span<const Monomial> generators, unsigned s, const PowerLimits& limits) {
  if (s == 0) throw std::invalid_argument("power: s must be at least 1");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[i] == generators[j]) {
        throw std::invalid_argument("power: duplicate generator at position " +
                                    std::to_string(i + 1));
      }
    }
  }
  const auto estimate = estimate_power_ops(generators.size(), s);
  if (estimate > limits.max_pair_ops) {
    throw GuardExceeded("power with " + std::to_string(generators.size()) +
                            " generators and s = " + std::to_string(s) + " (" +
                            std::to_string(count_products(generators.size(), s)) + " products)",
                        estimate, limits.max_pair_ops);
  }

  PowerIdeal p;
  p.base_.assign(generators.begin(), generators.end());
  p.s_ = s;
  if (s == 2) {
    p.ordered_ = ordered_power(generators);
    const auto values = p.ordered_->sorted_values();
    p.products_.assign(values.begin(), values.end());
  } else {
    p.products_ = enumerate_products(generators, s);
  }
  p.flags_ = minimal_flags(p.products_);
  for (std::size_t k = 0; k < p.products_.size(); ++k) {
    (p.flags_[k] ? p.minimal_ : p.non_minimal_).push_back(p.products_[k]);
  }
  return p;
}

PowerIdeal power(const RootedList& rl, unsigned s, const PowerLimits& limits) {
  return power(rl.entries(), s, limits);
}

}  // namespace coverq
