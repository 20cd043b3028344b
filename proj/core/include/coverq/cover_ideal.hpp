#pragma once

#include <cstddef>
#include <cstdint>

#include "coverq/graph.hpp"
#include "coverq/monomial.hpp"

namespace coverq {

inline constexpr std::size_t kDefaultExhaustionBound = 24;

/// Minimal vertex covers by exhaustive subset enumeration. This is the
/// brute-force reference the recursive constructions are checked against,
/// so it refuses graphs with more than `bound` vertices. An edgeless graph
/// has the empty cover, i.e. the unit monomial.
MonomialSet minimal_vertex_covers(const Graph& g, std::size_t bound = kDefaultExhaustionBound);

/// True iff the vertex set of the squarefree monomial `m` meets every edge.
bool is_vertex_cover(const Graph& g, const Monomial& m);

/// The cover ideal J(G) with its minimal generators.
class CoverIdeal {
 public:
  CoverIdeal(Graph graph, MonomialSet generators);

  const Graph& graph() const noexcept { return graph_; }
  const MonomialSet& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

 private:
  Graph graph_;
  MonomialSet generators_;
};

CoverIdeal cover_ideal(const Graph& g, std::size_t bound = kDefaultExhaustionBound);

/// |G(J(P_n))| from c(2) = c(3) = 2, c(4) = 3, c(n) = c(n-2) + c(n-3).
std::uint64_t count_generators_path(std::size_t n);

}  // namespace coverq
