#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Monomial/Graph value types, so agreement is evidence.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coverq/graph.hpp"
#include "coverq/monomial.hpp"

namespace oracle {

using Exps = std::vector<int>;

inline Exps exps(const coverq::Monomial& m) {
  Exps e(m.alphabet());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(m[i]);
  return e;
}

inline bool le(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Exps add(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline int degree(const Exps& a) {
  int d = 0;
  for (int x : a) d += x;
  return d;
}

/// Minimal vertex covers as label sets, by checking every subset and then
/// discarding any that contains another cover.
inline std::set<std::set<std::string>> vertex_covers(const coverq::Graph& g) {
  const auto n = g.vertex_count();
  const auto edges = g.edges();
  std::vector<std::vector<bool>> covers;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) ok = false;
    }
    if (!ok) continue;
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    covers.push_back(s);
  }
  std::set<std::set<std::string>> out;
  for (const auto& c : covers) {
    bool minimal = true;
    for (const auto& d : covers) {
      if (d == c) continue;
      bool subset = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (d[i] && !c[i]) subset = false;
      }
      if (subset) minimal = false;
    }
    if (!minimal) continue;
    std::set<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i]) labels.insert(g.label(i));
    }
    out.insert(labels);
  }
  return out;
}

inline std::set<std::string> support_labels(const coverq::Monomial& m, const coverq::Graph& g) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < m.alphabet(); ++i) {
    if (m[i]) out.insert(g.label(i));
  }
  return out;
}

/// Linear quotients by definition: for every r, each minimal element of
/// { u_i / gcd(u_i, u_r) : i < r } has degree one. Returns the first failing
/// 1-based r, or 0 when the order passes.
inline std::size_t first_nonlinear_step(const std::vector<Exps>& order) {
  for (std::size_t r = 1; r < order.size(); ++r) {
    std::vector<Exps> cols;
    for (std::size_t i = 0; i < r; ++i) {
      Exps c(order[r].size());
      for (std::size_t v = 0; v < c.size(); ++v) c[v] = std::max(0, order[i][v] - order[r][v]);
      cols.push_back(c);
    }
    for (const auto& c : cols) {
      bool minimal = true;
      for (const auto& d : cols) {
        if (d != c && le(d, c)) minimal = false;
      }
      if (minimal && degree(c) != 1) return r + 1;
    }
  }
  return 0;
}

/// Rooted order of the second power straight from the definition: the
/// maximal expression of a value is its lex-greatest exponent vector over
/// the base list, and values are sorted by that vector, greatest first.
inline std::vector<Exps> second_power_rooted(const std::vector<Exps>& base) {
  const auto q = base.size();
  std::vector<std::pair<std::vector<int>, Exps>> best;  // (max expression vector, value)
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i; j < q; ++j) {
      std::vector<int> a(q, 0);
      ++a[i];
      ++a[j];
      const Exps value = add(base[i], base[j]);
      auto it = std::find_if(best.begin(), best.end(), [&](const auto& p) { return p.second == value; });
      if (it == best.end()) {
        best.emplace_back(a, value);
      } else if (a > it->first) {
        it->first = a;
      }
    }
  }
  std::sort(best.begin(), best.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<Exps> out;
  for (auto& p : best) out.push_back(p.second);
  return out;
}

/// Minimal elements of a list, keeping list order.
inline std::vector<Exps> minimal_elements(const std::vector<Exps>& xs) {
  std::vector<Exps> out;
  for (const auto& x : xs) {
    bool minimal = true;
    for (const auto& y : xs) {
      if (y != x && le(y, x)) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

/// Number of minimal vertex covers of P_n, from a local characterisation
/// rather than from subset minimality.
inline std::uint64_t path_cover_count(std::size_t n) {
  // A subset S of a path is a minimal cover iff no two consecutive vertices
  // are missing and every chosen vertex has a missing neighbor.
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1; };
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) {
      if (!in(i) && !in(i + 1)) ok = false;
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!in(i)) continue;
      const bool left_missing = i > 0 && !in(i - 1);
      const bool right_missing = i + 1 < n && !in(i + 1);
      if (!left_missing && !right_missing) ok = false;
    }
    if (ok) ++total;
  }
  return total;
}

/// Random graph on v1..vk with edge probability p (not necessarily chordal).
inline coverq::Graph random_graph(std::size_t k, double p, std::mt19937_64& rng) {
  coverq::GraphBuilder b;
  for (std::size_t i = 1; i <= k; ++i) b.add_vertex("v" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      if (coin(rng)) b.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
    }
  }
  return b.build();
}

inline coverq::Monomial random_monomial(std::size_t alphabet, unsigned max_exp, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, max_exp);
  std::vector<unsigned> e(alphabet);
  for (auto& x : e) x = d(rng);
  return coverq::Monomial::from_exponents(e);
}

}  // namespace oracle
