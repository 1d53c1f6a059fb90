#include "acq/small_graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "acq/error.hpp"

namespace acq {

SmallGraph::SmallGraph(std::size_t n) : n_(n) {
  if (n > kMaxOrder) {
    fail(ErrorKind::capacity, "small graphs hold at most 16 vertices");
  }
}

SmallGraph SmallGraph::from_pair_mask(std::size_t n, std::uint64_t mask) {
  SmallGraph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
  SmallGraph s(g.vertex_count());
  for (const Edge& e : g.edges()) s.add_edge(e.u, e.v);
  return s;
}

std::size_t SmallGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(rows_[v]));
  return twice / 2;
}

void SmallGraph::add_edge(std::size_t u, std::size_t v) noexcept {
  rows_[u] |= static_cast<std::uint16_t>(1U << v);
  rows_[v] |= static_cast<std::uint16_t>(1U << u);
}

SmallGraph SmallGraph::complement() const {
  SmallGraph c(n_);
  const auto all = static_cast<std::uint16_t>((1U << n_) - 1U);
  for (std::size_t v = 0; v < n_; ++v) {
    c.rows_[v] = static_cast<std::uint16_t>(all & ~rows_[v] & ~(1U << v));
  }
  return c;
}

SmallGraph SmallGraph::without_last_vertex() const {
  SmallGraph s(n_ - 1);
  const auto keep = static_cast<std::uint16_t>((1U << (n_ - 1)) - 1U);
  for (std::size_t v = 0; v + 1 < n_; ++v) s.rows_[v] = rows_[v] & keep;
  return s;
}

Distance SmallGraph::diameter() const noexcept {
  if (n_ < 2) return 0;
  const auto all = static_cast<std::uint32_t>((1U << n_) - 1U);
  Distance worst = 0;
  for (std::size_t s = 0; s < n_; ++s) {
    std::uint32_t seen = 1U << s;
    std::uint32_t frontier = seen;
    Distance depth = 0;
    while (seen != all) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= rows_[std::countr_zero(f)];
      next &= ~seen;
      if (next == 0) return kInfinity;
      seen |= next;
      frontier = next;
      ++depth;
    }
    worst = std::max(worst, depth);
  }
  return worst;
}

Graph SmallGraph::to_graph() const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(n_, edges);
}

std::uint64_t SmallGraph::pair_mask() const noexcept {
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j, ++bit) {
      if (adjacent(i, j)) mask |= std::uint64_t{1} << bit;
    }
  }
  return mask;
}

namespace {

// Individualisation-refinement search for the largest pair mask. Twin
// vertices (equal neighbourhoods up to each other) are interchangeable, so
// only one per twin class is individualised.
class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g), n_(g.order()) {}

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    std::vector<std::uint16_t> cells{static_cast<std::uint16_t>((1U << n_) - 1U)};
    search(std::move(cells));
    return best_;
  }

 private:
  using Signature = std::array<std::uint8_t, SmallGraph::kMaxOrder>;

  void refine(std::vector<std::uint16_t>& cells) const {
    bool split = true;
    while (split) {
      split = false;
      std::vector<std::uint16_t> next;
      next.reserve(n_);
      for (std::uint16_t cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<Signature, std::uint8_t>> members;
        for (std::uint32_t c = cell; c != 0; c &= c - 1) {
          const auto v = static_cast<std::uint8_t>(std::countr_zero(c));
          Signature sig{};
          for (std::size_t k = 0; k < cells.size(); ++k) {
            sig[k] = static_cast<std::uint8_t>(std::popcount(
                static_cast<std::uint16_t>(g_.row(v) & cells[k])));
          }
          members.emplace_back(sig, v);
        }
        std::sort(members.begin(), members.end());
        std::uint16_t group = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (i > 0 && members[i].first != members[i - 1].first) {
            next.push_back(group);
            group = 0;
            split = true;
          }
          group = static_cast<std::uint16_t>(group | (1U << members[i].second));
        }
        next.push_back(group);
      }
      cells = std::move(next);
    }
  }

  bool twins(std::size_t a, std::size_t b) const {
    const auto mask = static_cast<std::uint16_t>(~((1U << a) | (1U << b)));
    return (g_.row(a) & mask) == (g_.row(b) & mask);
  }

  void search(std::vector<std::uint16_t> cells) {
    refine(cells);
    if (cells.size() == n_) {
      std::array<std::uint8_t, SmallGraph::kMaxOrder> order{};
      for (std::size_t i = 0; i < n_; ++i) {
        order[i] = static_cast<std::uint8_t>(std::countr_zero(cells[i]));
      }
      std::uint64_t key = 0;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j, ++bit) {
          if (g_.adjacent(order[i], order[j])) key |= std::uint64_t{1} << bit;
        }
      }
      best_ = std::max(best_, key);
      return;
    }
    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;
    const std::uint16_t cell = cells[target];

    std::vector<std::size_t> tried;
    for (std::uint32_t c = cell; c != 0; c &= c - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(c));
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(t, v); })) {
        continue;
      }
      tried.push_back(v);
      std::vector<std::uint16_t> branch;
      branch.reserve(cells.size() + 1);
      branch.insert(branch.end(), cells.begin(), cells.begin() + static_cast<long>(target));
      branch.push_back(static_cast<std::uint16_t>(1U << v));
      branch.push_back(static_cast<std::uint16_t>(cell & ~(1U << v)));
      branch.insert(branch.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
      search(std::move(branch));
    }
  }

  const SmallGraph& g_;
  std::size_t n_;
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t canonical_key(const SmallGraph& g) {
  if (g.order() > 11) fail(ErrorKind::capacity, "canonical keys support at most 11 vertices");
  return Canonizer(g).run();
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const SmallGraph&)>& visit) {
  if (n > 8) fail(ErrorKind::capacity, "labelled enumeration supports at most 8 vertices");
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(SmallGraph::from_pair_mask(n, mask));
}

std::vector<SmallGraph> unlabeled_graphs(std::size_t n,
                                         const std::function<bool(const SmallGraph&)>& keep) {
  if (n > 11) fail(ErrorKind::capacity, "unlabelled enumeration supports at most 11 vertices");
  std::vector<SmallGraph> level{SmallGraph(0)};
  if (keep && !keep(level.front())) return {};
  for (std::size_t order = 1; order <= n; ++order) {
    std::unordered_set<std::uint64_t> seen;
    const std::uint32_t subsets = 1U << (order - 1);
    for (const SmallGraph& parent : level) {
      for (std::uint32_t nbrs = 0; nbrs < subsets; ++nbrs) {
        SmallGraph child(order);
        for (std::size_t v = 0; v + 1 < order; ++v) {
          for (std::size_t w = v + 1; w + 1 < order; ++w) {
            if (parent.adjacent(v, w)) child.add_edge(v, w);
          }
          if ((nbrs >> v) & 1U) child.add_edge(v, order - 1);
        }
        if (keep && !keep(child)) continue;
        seen.insert(canonical_key(child));
      }
    }
    std::vector<std::uint64_t> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    level.clear();
    level.reserve(keys.size());
    for (std::uint64_t key : keys) level.push_back(SmallGraph::from_pair_mask(order, key));
  }
  return level;
}

}  // namespace acq
