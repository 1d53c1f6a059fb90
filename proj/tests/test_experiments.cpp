#include <gtest/gtest.h>

#include <numeric>

#include "acq/experiments.hpp"
#include "fixtures.hpp"

using namespace acq;

namespace {

std::uint64_t tally_sum(const ExperimentResult& r) {
  std::uint64_t s = 0;
  for (const auto& [key, count] : r.counts) s += count;
  return s;
}

}  // namespace

TEST(RandomGraph, Extremes) {
  EXPECT_EQ(random_graph(5, 1.0, 3).edge_count(), 10u);
  EXPECT_EQ(random_graph(5, 0.0, 3).edge_count(), 0u);
  EXPECT_EQ(random_graph(0, 0.5, 3).vertex_count(), 0u);
  EXPECT_EQ(fx::error_kind([] { random_graph(5, 1.5, 3); }), ErrorKind::invalid_argument);
  EXPECT_EQ(fx::error_kind([] { random_graph(5, -0.1, 3); }), ErrorKind::invalid_argument);
}

TEST(RandomGraph, Deterministic) {
  EXPECT_EQ(random_graph(10, 0.5, 77), random_graph(10, 0.5, 77));
  EXPECT_NE(random_graph(10, 0.5, 77), random_graph(10, 0.5, 78));
  EXPECT_EQ(trial_seed(1, 2), trial_seed(1, 2));
  EXPECT_NE(trial_seed(1, 2), trial_seed(2, 1));
}

TEST(RandomGraph, EdgeDensityIsPlausible) {
  std::uint64_t edges = 0;
  for (std::uint64_t t = 0; t < 200; ++t) edges += random_graph(20, 0.3, trial_seed(8, t)).edge_count();
  const double mean = static_cast<double>(edges) / 200.0;
  EXPECT_NEAR(mean, 0.3 * 190, 3.0);
}

TEST(Diameter2Fraction, Examples) {
  const ExperimentResult full = diameter2_fraction(4, 1.0, 50, 1);
  EXPECT_DOUBLE_EQ(full.rate(), 1.0);
  EXPECT_EQ(tally_sum(full), full.trials);

  const ExperimentResult sparse = diameter2_fraction(10, 0.05, 1000, 1);
  EXPECT_LT(sparse.rate(), 0.05);
  EXPECT_GT(sparse.counts.at("disconnected"), 900u);
  EXPECT_EQ(tally_sum(sparse), 1000u);

  EXPECT_EQ(fx::error_kind([] { diameter2_fraction(4, 0.5, 0, 1); }), ErrorKind::invalid_argument);
}

TEST(Diameter2Fraction, MonotoneInPWithSharedSeeds) {
  // With shared seeds the same uniform draws are compared against a larger
  // p, so each sample only gains edges and the rate cannot drop.
  double last = 0.0;
  for (double p = 0.0; p <= 1.0001; p += 0.1) {
    const double rate = diameter2_fraction(12, std::min(p, 1.0), 400, 2024).rate();
    EXPECT_GE(rate, last) << p;
    last = rate;
  }
  EXPECT_DOUBLE_EQ(last, 1.0);
}

TEST(Diameter2Fraction, TrialsAreOrderIndependent) {
  const ExperimentResult a = diameter2_fraction(15, 0.3, 200, 9);
  std::uint64_t favorable = 0;
  for (std::uint64_t t = 0; t < 200; ++t)
    if (metric_profile(random_graph(15, 0.3, trial_seed(9, t))).diameter <= 2) ++favorable;
  EXPECT_EQ(a.favorable, favorable);
}

TEST(DiameterBands, Bands) {
  EXPECT_EQ(band_of(1), DiameterBand::one);
  EXPECT_EQ(band_of(3), DiameterBand::three);
  EXPECT_EQ(band_of(4), DiameterBand::ge4);
  EXPECT_EQ(band_of(9), DiameterBand::ge4);
  EXPECT_EQ(band_of(kInfinity), DiameterBand::inf);
  EXPECT_EQ(fx::error_kind([] { band_of(0); }), ErrorKind::invalid_argument);
}

TEST(DiameterBands, ClassPairs) {
  const DiameterClassPair c5 = diameter_class_pair(fx::cycle(5));
  EXPECT_EQ(c5.graph, DiameterBand::two);
  EXPECT_EQ(c5.complement, DiameterBand::two);

  const DiameterClassPair empty3 = diameter_class_pair(Graph::from_edges(3, {}));
  EXPECT_EQ(cell_name(empty3), "inf,1");

  const DiameterClassPair p5bar = diameter_class_pair(complement(fx::path(5)));
  EXPECT_EQ(cell_name(p5bar), "2,ge4");
  EXPECT_TRUE(is_admissible(p5bar));
  EXPECT_TRUE(is_admissible({DiameterBand::three, DiameterBand::three}));
  EXPECT_FALSE(is_admissible({DiameterBand::ge4, DiameterBand::ge4}));
  EXPECT_FALSE(is_admissible({DiameterBand::inf, DiameterBand::inf}));
  EXPECT_FALSE(is_admissible({DiameterBand::one, DiameterBand::one}));
}

TEST(Census, ExhaustiveSmall) {
  const ExperimentResult r = figure1_census(5, CensusMode::exhaustive);
  EXPECT_EQ(r.counts.count("forbidden"), 0u);
  EXPECT_EQ(r.favorable, r.trials);
  EXPECT_EQ(tally_sum(r), r.trials);
  // Labelled graphs on 2..5 vertices.
  EXPECT_EQ(r.trials, 2u + 8u + 64u + 1024u);
  EXPECT_EQ(fx::error_kind([] { figure1_census(10, CensusMode::exhaustive); }), ErrorKind::capacity);
}

TEST(Census, SampledDeterministic) {
  const ExperimentResult a = figure1_census(9, CensusMode::sampled, 500, 4);
  const ExperimentResult b = figure1_census(9, CensusMode::sampled, 500, 4);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.trials, 500u);
  EXPECT_EQ(a.favorable, 500u);
  EXPECT_EQ(fx::error_kind([] { figure1_census(9, CensusMode::sampled, 0, 4); }),
            ErrorKind::invalid_argument);
}

TEST(Sabidussi, NamedAndRandom) {
  // Named cases: the bound holds with equality for the pentagon.
  EXPECT_LE(metric_profile(fx::complete(5)).diameter, 2u);
  EXPECT_EQ(degree_profile(fx::cycle(5)).min_degree * 2, 4u);
  EXPECT_EQ(metric_profile(fx::cycle(5)).diameter, 2u);

  for (std::size_t n = 2; n <= 12; ++n) {
    const ExperimentResult r = sabidussi_scan(n, 200, n);
    EXPECT_EQ(r.counts.at("violation"), 0u) << n;
    EXPECT_EQ(r.trials, 200u);
    EXPECT_EQ(tally_sum(r), r.trials);
  }
}
