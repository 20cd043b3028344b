#include "coverq/rooted_list.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "coverq/error.hpp"

namespace coverq {

RootedList::RootedList(Graph graph, std::vector<Monomial> entries,
                       std::vector<std::string> provenance, std::vector<std::string> notes)
    : graph_(std::move(graph)),
      entries_(std::move(entries)),
      provenance_(std::move(provenance)),
      notes_(std::move(notes)) {
  if (provenance_.size() != entries_.size()) {
    throw std::invalid_argument("rooted list: provenance size differs from entry count");
  }
}

std::optional<std::size_t> RootedList::position(const Monomial& m) const {
  auto it = std::find(entries_.begin(), entries_.end(), m);
  if (it == entries_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

namespace {

struct PathEntries {
  std::vector<Monomial> entries;
  std::vector<std::string> provenance;
};

// Entries of R(P_m) over an alphabet of `alphabet` variables (x_i has index i-1).
PathEntries path_entries(std::size_t m, std::size_t alphabet) {
  auto sq = [alphabet](std::initializer_list<std::size_t> vars) {
    std::vector<std::size_t> idx;
    for (auto v : vars) idx.push_back(v - 1);
    return Monomial::squarefree(alphabet, idx);
  };
  switch (m) {
    case 2:
      return {{sq({1}), sq({2})}, {"L", "R"}};
    case 3:
      return {{sq({2}), sq({1, 3})}, {"L", "R"}};
    case 4:
      return {{sq({1, 3}), sq({2, 3}), sq({2, 4})}, {"LL", "LR", "R"}};
    default:
      break;
  }
  PathEntries out;
  const auto left = path_entries(m - 2, alphabet);
  const auto right = path_entries(m - 3, alphabet);
  const auto lead_left = sq({m - 1});
  const auto lead_right = sq({m, m - 2});
  for (std::size_t k = 0; k < left.entries.size(); ++k) {
    out.entries.push_back(left.entries[k] * lead_left);
    out.provenance.push_back("L" + left.provenance[k]);
  }
  for (std::size_t k = 0; k < right.entries.size(); ++k) {
    out.entries.push_back(right.entries[k] * lead_right);
    out.provenance.push_back("R" + right.provenance[k]);
  }
  return out;
}

}  // namespace

RootedList rooted_list_path(std::size_t n) {
  if (n < 2) throw std::invalid_argument("rooted_list_path: n must be at least 2");
  if (n > kMaxVariables) throw std::invalid_argument("rooted_list_path: n exceeds 64");
  auto built = path_entries(n, n);
  return RootedList(path_graph(n), std::move(built.entries), std::move(built.provenance));
}

PathBranch path_branch(const RootedList& path_list, std::size_t k) {
  const auto& p = path_list.provenance(k);
  if (p.size() < 2) {
    throw std::invalid_argument("path_branch: entry " + std::to_string(k + 1) +
                                " lies below the two-level branching");
  }
  if (p[0] == 'L') return p[1] == 'L' ? PathBranch::A : PathBranch::B;
  return p[1] == 'L' ? PathBranch::C : PathBranch::D;
}

char to_char(PathBranch b) { return "ABCD"[static_cast<int>(b)]; }

std::string PivotStrategy::name() const {
  switch (rule_) {
    case Rule::Lowest:
      return "lowest";
    case Rule::Highest:
      return "highest";
    case Rule::Priority: {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < priority_.size(); ++i) {
        if (i) out += ',';
        out += priority_[i];
      }
      return out;
    }
  }
  return "?";
}

namespace {

class ChordalBuilder {
 public:
  ChordalBuilder(const Graph& g, const PivotStrategy& strategy) : g_(g) {
    const std::size_t n = g.vertex_count();
    rank_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      switch (strategy.rule()) {
        case PivotStrategy::Rule::Lowest:
          rank_[v] = v;
          break;
        case PivotStrategy::Rule::Highest:
          rank_[v] = n - 1 - v;
          break;
        case PivotStrategy::Rule::Priority:
          rank_[v] = n + v;
          break;
      }
      nbr_.push_back(g.neighbor_mask(v));
    }
    if (strategy.rule() == PivotStrategy::Rule::Priority) {
      const auto labels = strategy.priority_labels();
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto v = g.find(labels[i]);
        if (!v) throw std::invalid_argument("pivot priority names unknown vertex " + labels[i]);
        if (rank_[*v] < n) throw std::invalid_argument("pivot priority repeats " + labels[i]);
        rank_[*v] = i;
      }
    }
  }

  void run(std::vector<Monomial>& entries, std::vector<std::string>& provenance,
           std::vector<std::string>& notes) {
    const std::size_t n = g_.vertex_count();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<Item> items;
    build(all, items);
    std::unordered_set<Monomial, MonomialHash> seen;
    for (auto& item : items) {
      auto m = Monomial::from_mask(n, item.cover);
      if (!seen.insert(m).second) {
        notes.push_back("dropped duplicate " + render(m, g_.alphabet()) + " from branch " +
                        item.trace);
        continue;
      }
      entries.push_back(std::move(m));
      provenance.push_back(std::move(item.trace));
    }
  }

 private:
  struct Item {
    std::uint64_t cover;
    std::string trace;
  };

  bool has_edge(std::uint64_t alive) const {
    for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (nbr_[v] & alive) return true;
    }
    return false;
  }

  bool simplicial(std::size_t v, std::uint64_t alive) const {
    const std::uint64_t nb = nbr_[v] & alive;
    for (std::uint64_t rest = nb; rest; rest &= rest - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(rest));
      if ((nb & ~(std::uint64_t{1} << u) & ~nbr_[u]) != 0) return false;
    }
    return true;
  }

  void build(std::uint64_t alive, std::vector<Item>& out) const {
    if (!has_edge(alive)) {
      out.push_back({0, ""});
      return;
    }
    std::size_t pivot = g_.vertex_count();
    for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (simplicial(v, alive) && (pivot == g_.vertex_count() || rank_[v] < rank_[pivot])) {
        pivot = v;
      }
    }
    if (pivot == g_.vertex_count()) {
      throw std::logic_error("chordal recursion reached a subgraph without simplicial vertex");
    }
    std::vector<std::size_t> order;
    for (std::uint64_t rest = nbr_[pivot] & alive; rest; rest &= rest - 1) {
      order.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    std::sort(order.begin(), order.end(),
              [this](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
    order.insert(order.begin(), pivot);

    for (auto v : order) {
      const std::uint64_t open = nbr_[v] & alive;
      const std::uint64_t rest = alive & ~open & ~(std::uint64_t{1} << v);
      std::vector<Item> sub;
      build(rest, sub);
      for (auto& item : sub) {
        std::string trace = g_.label(v);
        if (!item.trace.empty()) trace += ">" + item.trace;
        out.push_back({item.cover | open, std::move(trace)});
      }
    }
  }

  const Graph& g_;
  std::vector<std::size_t> rank_;
  std::vector<std::uint64_t> nbr_;
};

}  // namespace

RootedList rooted_list_chordal(const Graph& g, const PivotStrategy& strategy) {
  if (g.empty()) throw std::invalid_argument("rooted_list_chordal: graph has no vertices");
  if (g.vertex_count() > kMaxVariables) {
    throw std::invalid_argument("rooted_list_chordal: more than 64 vertices");
  }
  if (auto cycle = chordless_cycle(g)) {
    std::vector<std::string> labels;
    for (auto v : *cycle) labels.push_back(g.label(v));
    throw NotChordal(std::move(labels));
  }
  std::vector<Monomial> entries;
  std::vector<std::string> provenance;
  std::vector<std::string> notes;
  ChordalBuilder(g, strategy).run(entries, provenance, notes);
  return RootedList(g, std::move(entries), std::move(provenance), std::move(notes));
}

}  // namespace coverq
