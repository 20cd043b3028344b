#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coverq/monomial.hpp"

namespace coverq {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph with string labels. Vertex order is the order of
/// insertion and is the canonical order used for tie-breaking everywhere.
/// Immutable once built; use GraphBuilder to construct one.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const std::string> vertices() const noexcept { return labels_; }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws std::invalid_argument for unknown labels.
  std::size_t index_of(std::string_view label) const;

  bool adjacent(std::size_t u, std::size_t v) const;
  /// Neighbors in ascending canonical order.
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  /// Neighbor bitmask; only available for graphs of at most 64 vertices.
  std::uint64_t neighbor_mask(std::size_t v) const;
  /// All edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Induced subgraph on the given vertices, keeping canonical order.
  Graph induced(std::span<const std::size_t> keep) const;

  /// Variable alphabet whose names are the vertex labels.
  Alphabet alphabet() const { return Alphabet(labels_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  /// Adds the vertex if new; returns its index either way.
  std::size_t add_vertex(std::string_view label);
  /// Adds both endpoints as needed. Rejects self-loops and duplicate edges.
  void add_edge(std::string_view a, std::string_view b);
  bool has_edge(std::string_view a, std::string_view b) const;
  Graph build() const;

 private:
  Graph graph_;
};

Graph path_graph(std::size_t n);
Graph complete_graph(std::span<const std::string> labels);
Graph make_graph(std::span<const std::string> vertices,
                 std::span<const std::pair<std::string, std::string>> edges);

/// Perfect elimination ordering when one exists (maximum cardinality search
/// followed by a check that each vertex's later neighbors form a clique).
std::optional<std::vector<std::size_t>> perfect_elimination_ordering(const Graph& g);
bool is_perfect_elimination_ordering(const Graph& g, std::span<const std::size_t> order);
bool is_chordal(const Graph& g);
/// A chordless cycle of length >= 4 (vertex indices in cycle order), or
/// nullopt when the graph is chordal.
std::optional<std::vector<std::size_t>> chordless_cycle(const Graph& g);

bool is_clique(const Graph& g, std::span<const std::size_t> vertices);
bool is_simplicial(const Graph& g, std::size_t v);
/// Labels in canonical order.
std::vector<std::string> simplicial_vertices(const Graph& g);

/// Induced subgraph on V(g) \ N[v].
Graph remove_closed_neighborhood(const Graph& g, std::string_view v);

/// Random chordal graph on k vertices labelled v1..vk. Each new vertex is
/// joined to a uniformly chosen clique inside the closed neighborhood of a
/// uniformly chosen existing vertex. Deterministic for a fixed seed.
Graph random_chordal(std::size_t k, std::uint64_t seed);

}  // namespace coverq
