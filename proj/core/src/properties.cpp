#include "coverq/properties.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coverq/cover_ideal.hpp"
#include "coverq/error.hpp"
#include "coverq/linear_quotients.hpp"
#include "coverq/ordered_power.hpp"
#include "coverq/minimality.hpp"
#include "coverq/regularity.hpp"

namespace coverq {

namespace {

constexpr std::size_t kViolationCap = 8;

class Collector {
 public:
  void add(std::string check, std::string detail) {
    ++total_;
    if (out_.size() < kViolationCap) out_.push_back({std::move(check), std::move(detail)});
  }
  Violations finish() {
    if (total_ > out_.size()) {
      out_.push_back({"truncated", std::to_string(total_ - out_.size()) + " further violations"});
    }
    return std::move(out_);
  }

 private:
  Violations out_;
  std::size_t total_ = 0;
};

// x_i over the path alphabet x1..xn.
Monomial var(std::size_t n, std::size_t i) { return Monomial::variable(n, i - 1); }

std::string show(const Monomial& m) { return render(m, Alphabet::indexed(m.alphabet())); }

std::string show_pair(std::size_t i, std::size_t j) {
  return "u" + std::to_string(i + 1) + "u" + std::to_string(j + 1);
}

// m over the first `alphabet` variables, or nullopt if it uses a later one.
std::optional<Monomial> shrink(const Monomial& m, std::size_t alphabet) {
  std::vector<unsigned> e(alphabet);
  for (std::size_t i = 0; i < m.alphabet(); ++i) {
    if (i < alphabet) {
      e[i] = m[i];
    } else if (m[i] != 0) {
      return std::nullopt;
    }
  }
  return Monomial::from_exponents(e);
}

std::vector<Monomial> to_vector(std::span<const Monomial> s) { return {s.begin(), s.end()}; }

void compare_sets(Collector& c, const std::string& check, const MonomialSet& got,
                  const MonomialSet& want, const Alphabet& a) {
  for (const auto& m : got) {
    if (!want.contains(m)) c.add(check, "unexpected " + render(m, a));
  }
  for (const auto& m : want) {
    if (!got.contains(m)) c.add(check, "missing " + render(m, a));
  }
}

std::size_t rank(const OrderedPower& op, const Monomial& m) {
  auto r = op.rank_of(m);
  if (!r) throw std::logic_error("value " + show(m) + " missing from F(I^2)");
  return *r;
}

// Indices of R(P_n) in branches A, B, C, D.
std::array<std::vector<std::size_t>, 4> branches(const RootedList& rl) {
  std::array<std::vector<std::size_t>, 4> out;
  for (std::size_t k = 0; k < rl.size(); ++k) {
    out[static_cast<std::size_t>(path_branch(rl, k))].push_back(k);
  }
  return out;
}

}  // namespace

namespace checks {

Violations path_oracle(std::size_t n) {
  Collector c;
  const auto rl = rooted_list_path(n);
  const MonomialSet listed(to_vector(rl.entries()));
  const auto oracle = minimal_vertex_covers(path_graph(n));
  if (listed.size() != rl.size()) c.add("distinct", "R(P_n) repeats an entry");
  compare_sets(c, "covers", listed, oracle, Alphabet::indexed(n));
  if (rl.size() != count_generators_path(n)) {
    c.add("count", std::to_string(rl.size()) + " entries, recurrence gives " +
                       std::to_string(count_generators_path(n)));
  }
  return c.finish();
}

Violations chordal_oracle(const Graph& g, const PivotStrategy& strategy) {
  Collector c;
  const auto rl = rooted_list_chordal(g, strategy);
  const MonomialSet listed(to_vector(rl.entries()));
  const auto oracle = minimal_vertex_covers(g);
  compare_sets(c, "covers[" + strategy.name() + "]", listed, oracle, g.alphabet());
  return c.finish();
}

Violations first_power_quotients(std::size_t n) {
  Collector c;
  const auto rl = rooted_list_path(n);
  const auto cert = check_linear_quotients(rl.entries());
  if (!cert.passed) {
    c.add("linear-quotients", "u" + std::to_string(cert.witness->r) + " has colon generator " +
                                  show(cert.witness->colon));
  }
  return c.finish();
}

Violations second_power_quotients(std::size_t n, const PowerLimits& limits) {
  Collector c;
  const auto p2 = power(rooted_list_path(n), 2, limits);
  const auto gens = p2.minimal_generators();
  const auto& op = p2.second_power_order();
  for (std::size_t k = 1; k < gens.size(); ++k) {
    if (rank(op, gens[k - 1]) >= rank(op, gens[k])) {
      c.add("order", "G(J^2) is not listed in rooted order at position " + std::to_string(k));
    }
  }
  const auto cert = check_linear_quotients(gens);
  if (!cert.passed) {
    const auto r = cert.witness->r;
    c.add("linear-quotients", "U" + std::to_string(r) + " = " + show(gens[r - 1]) +
                                  " has colon generator " + show(cert.witness->colon));
  }
  return c.finish();
}

Violations earlier_divisors(std::size_t n, const PowerLimits& limits) {
  Collector c;
  const auto p2 = power(rooted_list_path(n), 2, limits);
  for (const auto& U : p2.non_minimal()) {
    try {
      (void)earlier_divisor(U, p2);
    } catch (const PropertyViolation&) {
      c.add("earlier-divisor", "no higher minimal generator divides " + show(U));
    }
  }
  return c.finish();
}

Violations regularity(std::size_t n, bool with_second_power, const PowerLimits& limits) {
  Collector c;
  const auto a = max_generator_degree_path(n);
  const auto got = max_degree(rooted_list_path(n).entries());
  if (got != a) {
    c.add("max-degree", "R(P_n) reaches degree " + std::to_string(got) + ", closed form " +
                            std::to_string(a));
  }
  if (n >= 5) {
    const auto rec = std::max(max_generator_degree_path(n - 2) + 1,
                              max_generator_degree_path(n - 3) + 2);
    if (rec != a) c.add("recursion", "max(a_{n-2}+1, a_{n-3}+2) = " + std::to_string(rec));
  }
  const auto reg = regularity_second_power_path(n);
  if (reg != 2 * a) c.add("reg-formula", "reg " + std::to_string(reg) + " != 2 a_n");
  if (with_second_power) {
    const auto p2 = power(rooted_list_path(n), 2, limits);
    const auto top = max_degree(p2.minimal_generators());
    if (top != reg) {
      c.add("second-power-degree",
            "G(J^2) tops out at " + std::to_string(top) + ", expected " + std::to_string(reg));
    }
  }
  return c.finish();
}

Violations rooted_structure(std::size_t n) {
  Collector c;
  const auto rl = rooted_list_path(n);
  const auto e = rl.entries();

  auto monotone = [&](std::size_t index, const std::string& name) {
    bool seen = false;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const bool d = e[k][index] > 0;
      if (seen && !d) c.add("monotone-" + name, show(e[k]) + " at position " + std::to_string(k + 1));
      seen = seen || d;
    }
  };
  monotone(n - 1, "x_n");
  if (n >= 3) monotone(n - 3, "x_{n-2}");

  if (n >= 5) {
    const auto prev = rooted_list_path(n - 1);
    const auto head = rooted_list_path(n - 2).size();
    const auto alpha = rooted_list_path(n - 3).size();
    if (alpha >= prev.size()) c.add("prefix", "alpha is not smaller than |R(P_{n-1})|");
    for (std::size_t k = 0; k < alpha && k < prev.size(); ++k) {
      if (e[head + k] != var(n, n) * prev[k].extended(n)) {
        c.add("prefix", "entry " + std::to_string(head + k + 1) + " is not x_n w_" +
                            std::to_string(k + 1));
      }
    }
  }

  const auto first = std::find_if(e.begin(), e.end(), [&](const Monomial& m) {
    return m[n - 2] == 0;
  });
  if (first == e.end()) {
    c.add("colon", "every entry is divisible by x_{n-1}");
  } else {
    const auto k = static_cast<std::size_t>(first - e.begin());
    const MonomialSet expect{var(n, n - 1)};
    if (MonomialSet(colon_generators(e, k)) != expect) {
      c.add("colon", "(u_1..u_{k-1}):(u_k) is not (x_{n-1})");
    }
    for (std::size_t i = k + 1; i < e.size(); ++i) {
      auto rest = colon_generators(e.subspan(k), i - k);
      rest.push_back(var(n, n - 1));
      if (MonomialSet(colon_generators(e, i)) != minimalize(rest)) {
        c.add("colon", "split fails at u" + std::to_string(i + 1));
      }
    }
  }

  if (n >= 4) {
    const auto sub = rooted_list_path(n - 2);
    for (const auto& u : e) {
      if (u[n - 1] == 0) continue;
      const auto rest = colon(u, var(n, n));
      const bool found = std::any_of(sub.entries().begin(), sub.entries().end(),
                                     [&](const Monomial& v) { return divides(v.extended(n), rest); });
      if (!found) c.add("contains-cover", show(u) + " / x_n contains no cover of P_{n-2}");
    }
  }
  return c.finish();
}

namespace {

// Shared body of the x_{n-1} R(P_{n-2}) and x_n x_{n-2} R(P_{n-3}) embeddings.
void check_embedding(Collector& c, const std::string& tag, const RootedList& big,
                     const OrderedPower& big_op, const RootedList& small,
                     const OrderedPower& small_op, const Monomial& lead, std::size_t offset) {
  const std::size_t n = big.graph().vertex_count();
  for (std::size_t k = 0; k < small.size(); ++k) {
    if (big[offset + k] != lead * small[k].extended(n)) {
      c.add(tag + "-entries", "position " + std::to_string(offset + k + 1));
    }
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      const auto& ms = small_op.maximal(rank(small_op, small[i] * small[j]));
      const auto& mb = big_op.maximal(rank(big_op, big[offset + i] * big[offset + j]));
      const bool a = ms.i == i && ms.j == j;
      const bool b = mb.i == offset + i && mb.j == offset + j;
      if (a != b) c.add(tag + "-maximal", show_pair(i, j));
    }
  }
  // F(small^2) maps into F(big^2) and keeps its order.
  const auto sq = lead * lead;
  std::optional<std::size_t> last;
  for (const auto& U : small_op.sorted_values()) {
    const auto r = big_op.rank_of(sq * U.extended(n));
    if (!r) {
      c.add(tag + "-membership", show(U) + " scaled is not in F(J(P_n)^2)");
      continue;
    }
    if (last && *r <= *last) c.add(tag + "-order", "order breaks at " + show(U));
    last = r;
  }
  // Conversely every value divisible by the square comes from the smaller list.
  for (const auto& W : big_op.sorted_values()) {
    if (!divides(sq, W)) continue;
    const auto U = shrink(colon(W, sq), small.graph().vertex_count());
    if (!U || !small_op.rank_of(*U)) {
      c.add(tag + "-membership", show(W) + " has no preimage");
    }
  }
}

}  // namespace

Violations order_preservation(std::size_t n) {
  Collector c;
  if (n < 4) return c.finish();
  const auto rl = rooted_list_path(n);
  const auto op = ordered_power(rl);
  const auto l2 = rooted_list_path(n - 2);
  check_embedding(c, "n-2", rl, op, l2, ordered_power(l2), var(n, n - 1), 0);
  if (n >= 5) {
    const auto l3 = rooted_list_path(n - 3);
    check_embedding(c, "n-3", rl, op, l3, ordered_power(l3), var(n, n) * var(n, n - 2),
                    l2.size());
  }
  return c.finish();
}

namespace {

void check_scaled_minimality(Collector& c, const std::string& tag, const PowerIdeal& big,
                             const PowerIdeal& small, const Monomial& lead) {
  const std::size_t n = big.base().front().alphabet();
  const auto sq = lead * lead;
  const auto& small_op = small.second_power_order();
  for (std::size_t r = 0; r < small_op.size(); ++r) {
    const auto scaled = sq * small_op.value(r).extended(n);
    if (big.is_minimal_generator(scaled) != small.is_minimal(r)) {
      c.add(tag, show(small_op.value(r)) + " minimality changes under scaling");
    }
  }
}

}  // namespace

Violations scaling(std::size_t n) {
  Collector c;
  if (n < 4) return c.finish();
  const auto rl = rooted_list_path(n);
  const auto p2 = power(rl, 2);
  const auto& op = p2.second_power_order();
  const auto l2 = rooted_list_path(n - 2);
  const auto p2_small = power(l2, 2);
  check_scaled_minimality(c, "square-x_{n-1}", p2, p2_small, var(n, n - 1));
  if (n >= 5) {
    check_scaled_minimality(c, "square-x_n-x_{n-2}", p2, power(rooted_list_path(n - 3), 2),
                            var(n, n) * var(n, n - 2));
  }
  if (n < 7) return c.finish();

  const auto b = branches(rl);
  const auto& A = b[0];
  const auto& B = b[1];
  const auto& C = b[2];
  const auto& op_small = p2_small.second_power_order();
  const auto xa = var(n, n - 1);
  const auto xc = var(n, n);

  // A*C products against F(J(P_{n-2})^2).
  std::vector<std::pair<std::size_t, std::size_t>> ac;  // (rank below, rank above)
  for (auto ia : A) {
    const auto u = *shrink(colon(rl[ia], xa), n - 2);
    const auto pu = l2.position(u);
    if (!pu) {
      c.add("ac-shape", show(rl[ia]) + " / x_{n-1} is not in R(P_{n-2})");
      continue;
    }
    for (auto ic : C) {
      const auto v = *shrink(colon(rl[ic], xc), n - 2);
      const auto pv = l2.position(v);
      if (!pv) {
        c.add("ac-shape", show(rl[ic]) + " / x_n is not in R(P_{n-2})");
        continue;
      }
      const auto small_rank = rank(op_small, u * v);
      const auto big_value = rl[ia] * rl[ic];
      const auto big_rank = rank(op, big_value);
      if (p2_small.is_minimal(small_rank) && !p2.is_minimal(big_rank)) {
        c.add("ac-minimal", show(big_value) + " is not minimal");
      }
      const auto& ms = op_small.maximal(small_rank);
      if (ms.i == *pu && ms.j == *pv) {
        const auto& mb = op.maximal(big_rank);
        if (mb.i != ia || mb.j != ic) c.add("ac-maximal", show(big_value));
      }
      ac.emplace_back(small_rank, big_rank);
    }
  }
  std::sort(ac.begin(), ac.end());
  ac.erase(std::unique(ac.begin(), ac.end()), ac.end());
  for (std::size_t k = 1; k < ac.size(); ++k) {
    if (ac[k].first == ac[k - 1].first) {
      c.add("ac-order", "one value of F(J(P_{n-2})^2) maps to two values");
    } else if (ac[k].second <= ac[k - 1].second) {
      c.add("ac-order", "rank inversion at " + show(op.value(ac[k].second)));
    }
  }

  // B*C products against F(J(P_{n-5})^2).
  const auto l5 = rooted_list_path(n - 5);
  const auto p5 = power(l5, 2);
  const auto& op5 = p5.second_power_order();
  const auto lb = var(n, n - 1) * var(n, n - 2) * var(n, n - 4);
  const auto lc = var(n, n) * var(n, n - 2) * var(n, n - 4);
  if (B.size() != l5.size() || C.size() != l5.size()) {
    c.add("bc-shape", "B and C do not match R(P_{n-5}) in size");
    return c.finish();
  }
  for (std::size_t k = 0; k < l5.size(); ++k) {
    if (rl[B[k]] != lb * l5[k].extended(n)) c.add("bc-shape", "B entry " + std::to_string(k + 1));
    if (rl[C[k]] != lc * l5[k].extended(n)) c.add("bc-shape", "C entry " + std::to_string(k + 1));
  }
  for (std::size_t i = 0; i < l5.size(); ++i) {
    for (std::size_t j = 0; j < l5.size(); ++j) {
      const auto small_rank = rank(op5, l5[i] * l5[j]);
      const auto big_value = rl[B[i]] * rl[C[j]];
      const auto big_rank = rank(op, big_value);
      if (p5.is_minimal(small_rank) && !p2.is_minimal(big_rank)) {
        c.add("bc-minimal", show(big_value) + " is not minimal");
      }
      const auto& ms = op5.maximal(small_rank);
      if (i <= j && ms.i == i && ms.j == j) {
        const auto& mb = op.maximal(big_rank);
        if (mb.i != B[i] || mb.j != C[j]) c.add("bc-maximal", show(big_value));
      }
    }
  }
  const auto lift = lb * lc;
  std::optional<std::size_t> last;
  for (const auto& W : op5.sorted_values()) {
    const auto r = rank(op, lift * W.extended(n));
    if (last && r <= *last) c.add("bc-order", "rank inversion at " + show(W));
    last = r;
  }
  return c.finish();
}

Violations divisor_branches(std::size_t n) {
  Collector c;
  if (n < 7) return c.finish();
  const auto rl = rooted_list_path(n);
  const auto b = branches(rl);
  std::vector<PathBranch> branch(rl.size());
  for (std::size_t k = 0; k < rl.size(); ++k) branch[k] = path_branch(rl, k);

  auto check = [&](const std::vector<std::size_t>& first, PathBranch want, const char* tag) {
    for (auto iu : first) {
      for (auto iv : b[2]) {
        const auto uv = rl[iu] * rl[iv];
        for (std::size_t p = 0; p < rl.size(); ++p) {
          if (!divides(rl[p], uv)) continue;
          for (std::size_t q = p + 1; q < rl.size(); ++q) {
            if (!divides(rl[p] * rl[q], uv)) continue;
            if (branch[p] != want || branch[q] != PathBranch::C) {
              c.add(tag, show(rl[p] * rl[q]) + " = " + show_pair(p, q) + " divides " +
                             show_pair(iu, iv) + " from branches " + to_char(branch[p]) +
                             to_char(branch[q]));
            }
          }
        }
      }
    }
  };
  check(b[0], PathBranch::A, "ac-divisor");
  check(b[1], PathBranch::B, "bc-divisor");
  return c.finish();
}

Violations nonminimality(std::size_t n, const PowerLimits& limits) {
  Collector c;
  const auto rl = rooted_list_path(n);
  const auto e = rl.entries();
  const auto p2 = power(rl, 2, limits);
  const auto& op = p2.second_power_order();

  if (n >= 5) {
    for (const auto& u : e) {
      for (const auto& v : e) {
        std::optional<TwoFoldExpression> w;
        try {
          w = nonminimality_witness(u, v, p2);
        } catch (const PropertyViolation&) {
          c.add("witness", "no witness for " + show(u) + " * " + show(v));
          continue;
        }
        if (!w) continue;
        const auto uv = u * v;
        if (p2.is_minimal_generator(uv)) c.add("witness", show(uv) + " is minimal");
        if (!strictly_divides(w->value, uv) || rank(op, w->value) >= rank(op, uv)) {
          c.add("witness", show(w->value) + " is not a higher strict divisor of " + show(uv));
        }
      }
    }
  }

  for (std::size_t i = 1; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!check_colon_variable(i, j, p2).holds()) {
        c.add("colon-variable", show_pair(i, j) + " is minimal and maximally expressed");
      }
    }
  }

  const bool cube = estimate_power_ops(e.size(), 3) <= limits.max_pair_ops;
  std::optional<PowerIdeal> p3;
  if (cube) p3 = power(rl, 3, limits);
  for (const auto& u : e) {
    if (!pure_power_is_minimal(u, e, 2) || !p2.is_minimal_generator(u * u)) {
      c.add("pure-power", show(u) + "^2 is not minimal");
    }
    if (!pure_power_is_minimal(u, e, 3)) c.add("pure-power", show(u) + "^3 is not minimal");
    if (p3 && !p3->is_minimal_generator(pow(u, 3))) {
      c.add("pure-power", show(u) + "^3 is not minimal in the full cube");
    }
  }
  return c.finish();
}

Violations total_order(std::size_t n) {
  Collector c;
  const auto rl = rooted_list_path(n);
  const auto e = rl.entries();
  const auto op = ordered_power(rl);
  const std::size_t m = op.size();

  // Maximal expressions two ways: the index rule and literal lex comparison
  // of exponent vectors over all factorizations found by a direct scan.
  std::vector<TwoFoldExpression> top(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& value = op.value(r);
    top[r] = maximal_expression(value, e);
    std::vector<unsigned> best;
    std::pair<std::size_t, std::size_t> best_pair{};
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i; j < e.size(); ++j) {
        if (e[i] * e[j] != value) continue;
        std::vector<unsigned> vec(e.size(), 0);
        ++vec[i];
        ++vec[j];
        if (vec > best) {
          best = std::move(vec);
          best_pair = {i, j};
        }
      }
    }
    if (best_pair != std::pair{top[r].i, top[r].j}) {
      c.add("lex-rule", show(value) + ": index rule picks " + show_pair(top[r].i, top[r].j) +
                            ", lex picks " + show_pair(best_pair.first, best_pair.second));
    }
    const auto& pre = op.maximal(r);
    if (pre.i != top[r].i || pre.j != top[r].j) c.add("ordered-power", show(value));
  }

  auto gt = [&](std::size_t a, std::size_t b) {
    return compare_expressions(top[a], top[b]) == std::strong_ordering::greater;
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto ab = compare_expressions(top[a], top[b]);
      const auto ba = compare_expressions(top[b], top[a]);
      if ((ab == std::strong_ordering::equal) != (a == b)) c.add("strict", show_pair(a, b));
      if ((ab == std::strong_ordering::greater) != (ba == std::strong_ordering::less)) {
        c.add("antisymmetric", "ranks " + std::to_string(a) + ", " + std::to_string(b));
      }
      const auto precomputed = op.compare(op.value(a), op.value(b));
      if (precomputed != ab) c.add("ranks", "ranks " + std::to_string(a) + ", " + std::to_string(b));
      if (!gt(a, b)) continue;
      for (std::size_t d = 0; d < m; ++d) {
        if (gt(b, d) && !gt(a, d)) {
          c.add("transitive", "ranks " + std::to_string(a) + " > " + std::to_string(b) + " > " +
                                  std::to_string(d));
        }
      }
    }
  }
  // Spot-check the span-based comparator against the precomputed ranks.
  const std::size_t stride = std::max<std::size_t>(1, m / 24);
  for (std::size_t a = 0; a < m; a += stride) {
    for (std::size_t b = 0; b < m; b += stride) {
      if (rooted_compare(op.value(a), op.value(b), e) != op.compare(op.value(a), op.value(b))) {
        c.add("rooted-compare", "ranks " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
  return c.finish();
}

}  // namespace checks

namespace {

constexpr std::array<SuiteInfo, 11> kCatalog{{
    {Suite::OracleEquality, "oracle-equality", 2, 20,
     "rooted lists equal brute-force minimal vertex covers (paths and sampled chordal graphs)"},
    {Suite::FirstPower, "first-power", 2, 25, "J(P_n) has linear quotients in rooted order"},
    {Suite::SecondPower, "second-power", 2, 18, "J(P_n)^2 has linear quotients in rooted order"},
    {Suite::EarlierDivisor, "earlier-divisor", 2, 16,
     "every non-minimal 2-fold product has a higher minimal divisor"},
    {Suite::Regularity, "regularity", 2, 25,
     "generator degrees and reg(J(P_n)^2) match the closed forms"},
    {Suite::RootedStructure, "rooted-structure", 2, 20,
     "divisibility, prefix and colon structure of R(P_n)"},
    {Suite::OrderPreservation, "order-preservation", 4, 16,
     "embeddings of R(P_{n-2}) and R(P_{n-3}) keep order and maximal expressions"},
    {Suite::Scaling, "scaling", 4, 14,
     "minimality and order survive scaling and the A*C, B*C products"},
    {Suite::DivisorBranches, "divisor-branches", 7, 13,
     "divisors of A*C and B*C products stay in their branches"},
    {Suite::Nonminimality, "nonminimality", 2, 16,
     "non-minimality witnesses, colon variables and pure powers"},
    {Suite::TotalOrder, "total-order", 2, 10,
     "the rooted order is a strict total order given by lex exponent vectors"},
}};

}  // namespace

std::span<const SuiteInfo> suite_catalog() { return kCatalog; }

const SuiteInfo& suite_info(Suite s) {
  for (const auto& info : kCatalog) {
    if (info.id == s) return info;
  }
  throw std::logic_error("unknown suite");
}

std::optional<Suite> suite_from_name(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

std::string SuiteCase::id() const {
  if (sample) return "chordal#" + std::to_string(*sample);
  return "P" + std::to_string(n);
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

PivotStrategy shuffled_strategy(const Graph& g, std::uint64_t seed) {
  std::vector<std::string> labels(g.vertices().begin(), g.vertices().end());
  std::mt19937_64 rng(seed);
  std::shuffle(labels.begin(), labels.end(), rng);
  return PivotStrategy::priority(std::move(labels));
}

Graph chordal_sample_graph(std::size_t k, const VerifyOptions& options) {
  const std::size_t top = std::max<std::size_t>(2, options.chordal_max_vertices);
  const std::size_t vertices = 2 + k % (top - 1);
  return random_chordal(vertices, mix_seed(options.chordal_seed + k));
}

std::vector<PivotStrategy> sample_strategies(const Graph& g, std::uint64_t seed) {
  return {PivotStrategy::lowest(), PivotStrategy::highest(), shuffled_strategy(g, seed)};
}

std::vector<SuiteCase> plan_suite(Suite s, std::size_t max_n, const VerifyOptions& options) {
  const auto& info = suite_info(s);
  const std::size_t top = options.uncapped ? max_n : std::min(max_n, info.cap);
  std::vector<SuiteCase> out;
  for (std::size_t n = info.min_n; n <= top; ++n) out.push_back({s, n, std::nullopt});
  if (s == Suite::OracleEquality) {
    for (std::size_t k = 0; k < options.chordal_samples; ++k) out.push_back({s, 0, k});
  }
  return out;
}

CaseOutcome run_case(const SuiteCase& sc, const VerifyOptions& options) {
  CaseOutcome out{sc, {}, std::nullopt};
  const auto n = sc.n;
  const auto& limits = options.limits;
  try {
    switch (sc.suite) {
      case Suite::OracleEquality:
        if (sc.sample) {
          const auto g = chordal_sample_graph(*sc.sample, options);
          const auto seed = mix_seed(~(options.chordal_seed + *sc.sample));
          for (const auto& strategy : sample_strategies(g, seed)) {
            auto v = checks::chordal_oracle(g, strategy);
            out.violations.insert(out.violations.end(), v.begin(), v.end());
          }
        } else {
          out.violations = checks::path_oracle(n);
        }
        break;
      case Suite::FirstPower:
        out.violations = checks::first_power_quotients(n);
        break;
      case Suite::SecondPower:
        out.violations = checks::second_power_quotients(n, limits);
        break;
      case Suite::EarlierDivisor:
        out.violations = checks::earlier_divisors(n, limits);
        break;
      case Suite::Regularity: {
        const bool second = estimate_power_ops(count_generators_path(n), 2) <= limits.max_pair_ops;
        out.violations = checks::regularity(n, second, limits);
        break;
      }
      case Suite::RootedStructure:
        out.violations = checks::rooted_structure(n);
        break;
      case Suite::OrderPreservation:
        out.violations = checks::order_preservation(n);
        break;
      case Suite::Scaling:
        out.violations = checks::scaling(n);
        break;
      case Suite::DivisorBranches:
        out.violations = checks::divisor_branches(n);
        break;
      case Suite::Nonminimality:
        out.violations = checks::nonminimality(n, limits);
        break;
      case Suite::TotalOrder:
        out.violations = checks::total_order(n);
        break;
    }
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
  return out;
}

}  // namespace coverq
