#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "acq/graph.hpp"

namespace acq {

using ParameterValue = std::variant<std::int64_t, double, std::string>;

struct ExperimentResult {
  std::string name;
  std::vector<std::pair<std::string, ParameterValue>> parameters;
  // Outcome tallies; they partition the trials.
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t trials = 0;
  std::uint64_t favorable = 0;
  std::uint64_t seed = 0;
  // Census only: "+" cells of the diameter table that received a graph.
  std::vector<std::string> witnessed_cells;

  double rate() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(favorable) / static_cast<double>(trials);
  }
};

// Seed of trial `index` under `master`: SplitMix64 over (master, index), so
// every trial is reproducible on its own regardless of evaluation order.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) noexcept;

// G(n, p): each pair (i < j), in lexicographic order, is kept when the next
// 53-bit uniform draw of an mt19937_64 seeded with `seed` falls below p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Fraction of G(n, p) samples with diameter <= 2.
ExperimentResult diameter2_fraction(std::size_t n, double p, std::uint64_t trials,
                                    std::uint64_t seed);

// Diameter bands of the graph/complement table: 1, 2, 3, >= 4, infinite.
enum class DiameterBand { one, two, three, ge4, inf };

std::string_view to_string(DiameterBand b) noexcept;

// Requires d >= 1.
DiameterBand band_of(Distance d);

struct DiameterClassPair {
  DiameterBand graph;
  DiameterBand complement;
  friend auto operator<=>(const DiameterClassPair&, const DiameterClassPair&) = default;
};

DiameterClassPair diameter_class_pair(const Graph& g);

// True for the ten cells that can be populated.
bool is_admissible(DiameterClassPair pair) noexcept;

std::string cell_name(DiameterClassPair pair);

enum class CensusMode { exhaustive, sampled };

inline constexpr std::size_t kExhaustiveCensusMaxOrder = 9;
inline constexpr std::size_t kLabeledCensusMaxOrder = 7;

// Tallies (d(G), d(complement)) bands over graphs on 2 .. n_max vertices.
// Exhaustive mode walks every labelled pair mask up to order 7 and one
// graph per isomorphism class for orders 8 and 9; sampled mode draws
// `trials` graphs with order and edge probability uniform. Outcome keys are
// cell names plus "forbidden" for any graph landing in an empty cell;
// favorable counts graphs in admissible cells.
ExperimentResult figure1_census(std::size_t n_max, CensusMode mode, std::uint64_t trials = 0,
                                std::uint64_t seed = 0);

// Random graphs with minimum degree >= (n - 1) / 2 must have diameter <= 2.
// Each trial draws G(n, p) with p uniform, then adds random edges at
// deficient vertices until the degree bound holds.
ExperimentResult sabidussi_scan(std::size_t n, std::uint64_t trials, std::uint64_t seed);

}  // namespace acq
