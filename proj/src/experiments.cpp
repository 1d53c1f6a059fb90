#include "acq/experiments.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "acq/error.hpp"
#include "acq/small_graph.hpp"

namespace acq {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection keeps the draw uniform and identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::invalid_argument, "p must lie in [0, 1]");
}

class CensusTally {
 public:
  void add(DiameterClassPair pair) {
    ++result_.trials;
    if (is_admissible(pair)) {
      ++result_.favorable;
      ++result_.counts[cell_name(pair)];
      witnessed_.insert(pair);
    } else {
      ++result_.counts["forbidden"];
    }
  }

  void add(const SmallGraph& g) {
    add(DiameterClassPair{band_of(g.diameter()), band_of(g.complement().diameter())});
  }

  ExperimentResult finish() {
    for (const auto& pair : witnessed_) result_.witnessed_cells.push_back(cell_name(pair));
    return std::move(result_);
  }

  ExperimentResult& result() { return result_; }

 private:
  ExperimentResult result_;
  std::set<DiameterClassPair> witnessed_;
};

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  require_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit_draw(rng) < p) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

ExperimentResult diameter2_fraction(std::size_t n, double p, std::uint64_t trials,
                                    std::uint64_t seed) {
  require_probability(p);
  if (trials == 0) fail(ErrorKind::invalid_argument, "trials must be >= 1");
  ExperimentResult r;
  r.name = "diameter2_fraction";
  r.parameters = {{"n", static_cast<std::int64_t>(n)}, {"p", p}};
  r.seed = seed;
  r.counts = {{"diameter_le_2", 0}, {"diameter_ge_3", 0}, {"disconnected", 0}};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Distance d = metric_profile(random_graph(n, p, trial_seed(seed, t))).diameter;
    if (d <= 2) {
      ++r.counts["diameter_le_2"];
      ++r.favorable;
    } else if (d == kInfinity) {
      ++r.counts["disconnected"];
    } else {
      ++r.counts["diameter_ge_3"];
    }
    ++r.trials;
  }
  return r;
}

std::string_view to_string(DiameterBand b) noexcept {
  switch (b) {
    case DiameterBand::one: return "1";
    case DiameterBand::two: return "2";
    case DiameterBand::three: return "3";
    case DiameterBand::ge4: return "ge4";
    case DiameterBand::inf: return "inf";
  }
  return "?";
}

DiameterBand band_of(Distance d) {
  switch (d) {
    case 0: fail(ErrorKind::invalid_argument, "diameter 0 has no band");
    case 1: return DiameterBand::one;
    case 2: return DiameterBand::two;
    case 3: return DiameterBand::three;
    case kInfinity: return DiameterBand::inf;
    default: return DiameterBand::ge4;
  }
}

DiameterClassPair diameter_class_pair(const Graph& g) {
  if (g.vertex_count() < 2) fail(ErrorKind::invalid_argument, "need at least two vertices");
  return {band_of(metric_profile(g).diameter), band_of(metric_profile(complement(g)).diameter)};
}

bool is_admissible(DiameterClassPair pair) noexcept {
  using B = DiameterBand;
  switch (pair.graph) {
    case B::one: return pair.complement == B::inf;
    case B::two: return pair.complement != B::one;
    case B::three: return pair.complement == B::two || pair.complement == B::three;
    case B::ge4: return pair.complement == B::two;
    case B::inf: return pair.complement == B::one || pair.complement == B::two;
  }
  return false;
}

std::string cell_name(DiameterClassPair pair) {
  return std::string(to_string(pair.graph)) + "," + std::string(to_string(pair.complement));
}

ExperimentResult figure1_census(std::size_t n_max, CensusMode mode, std::uint64_t trials,
                                std::uint64_t seed) {
  if (n_max < 2) fail(ErrorKind::invalid_argument, "n_max must be >= 2");
  CensusTally tally;
  ExperimentResult& r = tally.result();
  r.name = "figure1_census";
  r.seed = seed;

  if (mode == CensusMode::exhaustive) {
    if (n_max > kExhaustiveCensusMaxOrder) {
      fail(ErrorKind::capacity, "exhaustive census supports n_max <= 9");
    }
    r.parameters = {{"n_max", static_cast<std::int64_t>(n_max)},
                    {"mode", std::string("exhaustive")},
                    {"labeled_up_to", static_cast<std::int64_t>(kLabeledCensusMaxOrder)}};
    for (std::size_t n = 2; n <= n_max; ++n) {
      if (n <= kLabeledCensusMaxOrder) {
        for_each_labeled_graph(n, [&](const SmallGraph& g) { tally.add(g); });
      } else {
        for (const SmallGraph& g : unlabeled_graphs(n)) tally.add(g);
      }
    }
    return tally.finish();
  }

  if (trials == 0) fail(ErrorKind::invalid_argument, "trials must be >= 1");
  r.parameters = {{"n_max", static_cast<std::int64_t>(n_max)},
                  {"mode", std::string("sampled")}};
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const std::size_t n = 2 + bounded_draw(rng, n_max - 1);
    const double p = unit_draw(rng);
    tally.add(diameter_class_pair(random_graph(n, p, rng())));
  }
  return tally.finish();
}

ExperimentResult sabidussi_scan(std::size_t n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 2) fail(ErrorKind::invalid_argument, "n must be >= 2");
  if (trials == 0) fail(ErrorKind::invalid_argument, "trials must be >= 1");
  ExperimentResult r;
  r.name = "sabidussi_scan";
  r.parameters = {{"n", static_cast<std::int64_t>(n)},
                  {"min_degree", static_cast<std::int64_t>(n / 2)}};
  r.seed = seed;
  r.counts = {{"diameter_le_2", 0}, {"violation", 0}};

  // Smallest integer degree with 2 * degree >= n - 1.
  const std::size_t threshold = n / 2;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const double p = unit_draw(rng);
    const Graph base = random_graph(n, p, rng());

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::size_t> degree(n, 0);
    std::vector<Edge> edges = base.edges();
    for (const Edge& e : edges) {
      adj[e.u][e.v] = adj[e.v][e.u] = true;
      ++degree[e.u];
      ++degree[e.v];
    }
    for (std::size_t v = 0; v < n; ++v) {
      while (degree[v] < threshold) {
        std::vector<std::size_t> open;
        for (std::size_t w = 0; w < n; ++w) {
          if (w != v && !adj[v][w]) open.push_back(w);
        }
        const std::size_t w = open[bounded_draw(rng, open.size())];
        adj[v][w] = adj[w][v] = true;
        ++degree[v];
        ++degree[w];
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    if (2 * degree_profile(g).min_degree + 1 < n) {
      fail(ErrorKind::precondition, "sample does not meet the minimum-degree filter");
    }
    ++r.trials;
    if (metric_profile(g).diameter <= 2) {
      ++r.counts["diameter_le_2"];
      ++r.favorable;
    } else {
      ++r.counts["violation"];
    }
  }
  return r;
}

}  // namespace acq
