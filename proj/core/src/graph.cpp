#include "coverq/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "coverq/error.hpp"

namespace coverq {

std::optional<std::size_t> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(label) + "'");
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::uint64_t Graph::neighbor_mask(std::size_t v) const {
  if (vertex_count() > 64) throw std::length_error("neighbor masks need at most 64 vertices");
  std::uint64_t mask = 0;
  for (auto w : adjacency_.at(v)) mask |= std::uint64_t{1} << w;
  return mask;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (auto v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  GraphBuilder b;
  for (auto v : sorted) b.add_vertex(label(v));
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t c = a + 1; c < sorted.size(); ++c) {
      if (adjacent(sorted[a], sorted[c])) b.add_edge(label(sorted[a]), label(sorted[c]));
    }
  }
  return b.build();
}

std::size_t GraphBuilder::add_vertex(std::string_view label) {
  if (label.empty()) throw std::invalid_argument("empty vertex label");
  if (auto v = graph_.find(label)) return *v;
  const std::size_t v = graph_.labels_.size();
  graph_.labels_.emplace_back(label);
  graph_.index_.emplace(std::string(label), v);
  graph_.adjacency_.emplace_back();
  return v;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  if (a == b) throw std::invalid_argument("self-loop on '" + std::string(a) + "'");
  const auto u = add_vertex(a);
  const auto v = add_vertex(b);
  auto& nu = graph_.adjacency_[u];
  auto& nv = graph_.adjacency_[v];
  if (std::binary_search(nu.begin(), nu.end(), v)) {
    throw std::invalid_argument("duplicate edge " + std::string(a) + " " + std::string(b));
  }
  nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
  nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
  ++graph_.edge_count_;
}

bool GraphBuilder::has_edge(std::string_view a, std::string_view b) const {
  auto u = graph_.find(a);
  auto v = graph_.find(b);
  return u && v && graph_.adjacent(*u, *v);
}

Graph GraphBuilder::build() const { return graph_; }

Graph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_graph: n must be at least 1");
  GraphBuilder b;
  for (std::size_t i = 1; i <= n; ++i) b.add_vertex("x" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    b.add_edge("x" + std::to_string(i), "x" + std::to_string(i + 1));
  }
  return b.build();
}

Graph complete_graph(std::span<const std::string> labels) {
  GraphBuilder b;
  for (const auto& l : labels) b.add_vertex(l);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) b.add_edge(labels[i], labels[j]);
  }
  return b.build();
}

Graph make_graph(std::span<const std::string> vertices,
                 std::span<const std::pair<std::string, std::string>> edges) {
  GraphBuilder b;
  for (const auto& v : vertices) b.add_vertex(v);
  for (const auto& [x, y] : edges) b.add_edge(x, y);
  return b.build();
}

bool is_clique(const Graph& g, std::span<const std::size_t> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t c = a + 1; c < vertices.size(); ++c) {
      if (!g.adjacent(vertices[a], vertices[c])) return false;
    }
  }
  return true;
}

bool is_simplicial(const Graph& g, std::size_t v) { return is_clique(g, g.neighbors(v)); }

std::vector<std::string> simplicial_vertices(const Graph& g) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (is_simplicial(g, v)) out.push_back(g.label(v));
  }
  return out;
}

bool is_perfect_elimination_ordering(const Graph& g, std::span<const std::size_t> order) {
  if (order.size() != g.vertex_count()) return false;
  std::vector<std::size_t> position(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.vertex_count() || position[order[i]] != g.vertex_count()) return false;
    position[order[i]] = i;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<std::size_t> later;
    for (auto w : g.neighbors(order[i])) {
      if (position[w] > i) later.push_back(w);
    }
    if (!is_clique(g, later)) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> perfect_elimination_ordering(const Graph& g) {
  // Maximum cardinality search visits vertices in reverse elimination order.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> visit_order;
  visit_order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    visited[best] = true;
    visit_order.push_back(best);
    for (auto w : g.neighbors(best)) {
      if (!visited[w]) ++weight[w];
    }
  }
  std::reverse(visit_order.begin(), visit_order.end());
  if (!is_perfect_elimination_ordering(g, visit_order)) return std::nullopt;
  return visit_order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

std::optional<std::vector<std::size_t>> chordless_cycle(const Graph& g) {
  if (is_chordal(g)) return std::nullopt;
  // Every chordless cycle passes through some v with non-adjacent cycle
  // neighbors u, w, and the rest of the cycle avoids N[v]. A shortest u-w
  // path outside N[v] \ {u, w} closes such a cycle, and shortest paths are
  // induced, so the cycle found is chordless.
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    auto nv = g.neighbors(v);
    for (std::size_t a = 0; a < nv.size(); ++a) {
      for (std::size_t c = a + 1; c < nv.size(); ++c) {
        const auto u = nv[a];
        const auto w = nv[c];
        if (g.adjacent(u, w)) continue;
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (auto x : nv) blocked[x] = true;
        blocked[u] = false;
        blocked[w] = false;

        std::vector<std::size_t> parent(n, n);
        std::deque<std::size_t> queue{u};
        parent[u] = u;
        while (!queue.empty() && parent[w] == n) {
          const auto x = queue.front();
          queue.pop_front();
          for (auto y : g.neighbors(x)) {
            if (blocked[y] || parent[y] != n) continue;
            parent[y] = x;
            queue.push_back(y);
          }
        }
        if (parent[w] == n) continue;
        std::vector<std::size_t> cycle{v};
        std::vector<std::size_t> path;
        for (auto x = w; x != u; x = parent[x]) path.push_back(x);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  throw std::logic_error("chordless_cycle: non-chordal graph without a witness");
}

Graph remove_closed_neighborhood(const Graph& g, std::string_view v) {
  const auto center = g.index_of(v);
  std::vector<std::size_t> keep;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (u != center && !g.adjacent(center, u)) keep.push_back(u);
  }
  return g.induced(keep);
}

Graph random_chordal(std::size_t k, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("random_chordal: k must be at least 1");
  std::mt19937_64 rng(seed);
  GraphBuilder b;
  std::vector<std::vector<std::size_t>> adj(k);
  auto name = [](std::size_t i) { return "v" + std::to_string(i + 1); };
  b.add_vertex(name(0));

  for (std::size_t fresh = 1; fresh < k; ++fresh) {
    const auto anchor = std::uniform_int_distribution<std::size_t>(0, fresh - 1)(rng);
    std::vector<std::size_t> closed = adj[anchor];
    closed.push_back(anchor);
    std::sort(closed.begin(), closed.end());

    // N[anchor] induces a chordal graph. With a perfect elimination ordering
    // every clique has a unique earliest vertex x and is x plus a subset of
    // x's later neighbors (which form a clique), so the number of nonempty
    // cliques led by x is 2^|later(x)|. Sampling x by that weight and then a
    // uniform subset gives a uniform nonempty clique.
    GraphBuilder local;
    for (auto v : closed) local.add_vertex(name(v));
    for (std::size_t a = 0; a < closed.size(); ++a) {
      for (std::size_t c = a + 1; c < closed.size(); ++c) {
        const auto& na = adj[closed[a]];
        if (std::find(na.begin(), na.end(), closed[c]) != na.end()) {
          local.add_edge(name(closed[a]), name(closed[c]));
        }
      }
    }
    const Graph lg = local.build();
    const auto peo = *perfect_elimination_ordering(lg);
    std::vector<std::size_t> position(peo.size());
    for (std::size_t i = 0; i < peo.size(); ++i) position[peo[i]] = i;

    std::vector<std::vector<std::size_t>> later(peo.size());
    std::uint64_t total = 0;
    std::vector<std::uint64_t> weight(peo.size());
    for (std::size_t x = 0; x < peo.size(); ++x) {
      for (auto y : lg.neighbors(x)) {
        if (position[y] > position[x]) later[x].push_back(y);
      }
      weight[x] = std::uint64_t{1} << later[x].size();
      total += weight[x];
    }
    auto pick = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
    std::size_t lead = 0;
    while (pick >= weight[lead]) {
      pick -= weight[lead];
      ++lead;
    }
    std::vector<std::size_t> clique{closed[lead]};
    for (auto y : later[lead]) {
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) clique.push_back(closed[y]);
    }

    b.add_vertex(name(fresh));
    for (auto c : clique) {
      b.add_edge(name(c), name(fresh));
      adj[c].push_back(fresh);
      adj[fresh].push_back(c);
    }
  }
  return b.build();
}

}  // namespace coverq
