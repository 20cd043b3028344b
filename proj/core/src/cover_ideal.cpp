#include "coverq/cover_ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverq/error.hpp"

namespace coverq {

MonomialSet minimal_vertex_covers(const Graph& g, std::size_t bound) {
  const std::size_t n = g.vertex_count();
  if (n > bound || n > 63) {
    throw GuardExceeded("minimal vertex cover enumeration over " + std::to_string(n) +
                            " vertices (bound " + std::to_string(bound) + ")",
                        n >= 64 ? UINT64_MAX : std::uint64_t{1} << n,
                        std::uint64_t{1} << std::min<std::size_t>(bound, 63));
  }
  std::vector<std::uint64_t> nbr(n);
  for (std::size_t v = 0; v < n; ++v) nbr[v] = g.neighbor_mask(v);

  std::vector<Monomial> covers;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    bool cover = true;
    for (std::size_t v = 0; v < n && cover; ++v) {
      // Every edge at an excluded vertex needs its other end in the set.
      if (!((mask >> v) & 1U) && (nbr[v] & ~mask) != 0) cover = false;
    }
    if (!cover) continue;
    // A cover is minimal iff dropping any single vertex uncovers an edge.
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v) {
      if (((mask >> v) & 1U) && (nbr[v] & ~mask) == 0) minimal = false;
    }
    if (minimal) covers.push_back(Monomial::from_mask(n, mask));
  }
  return minimalize(covers);
}

bool is_vertex_cover(const Graph& g, const Monomial& m) {
  if (m.alphabet() != g.vertex_count()) throw AlphabetMismatch(m.alphabet(), g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    if (m[u] == 0 && m[v] == 0) return false;
  }
  return true;
}

CoverIdeal::CoverIdeal(Graph graph, MonomialSet generators)
    : graph_(std::move(graph)), generators_(std::move(generators)) {}

CoverIdeal cover_ideal(const Graph& g, std::size_t bound) {
  return CoverIdeal(g, minimal_vertex_covers(g, bound));
}

std::uint64_t count_generators_path(std::size_t n) {
  if (n < 2) throw std::invalid_argument("count_generators_path: n must be at least 2");
  std::vector<std::uint64_t> c(std::max<std::size_t>(n + 1, 5), 0);
  c[2] = 2;
  c[3] = 2;
  c[4] = 3;
  for (std::size_t k = 5; k <= n; ++k) c[k] = c[k - 2] + c[k - 3];
  return c[n];
}

}  // namespace coverq
