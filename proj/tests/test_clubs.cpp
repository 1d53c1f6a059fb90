#include <gtest/gtest.h>

#include "acq/clubs.hpp"
#include "acq/experiments.hpp"
#include "fixtures.hpp"

using namespace acq;

namespace {

std::vector<std::vector<Vertex>> members_of(const std::vector<TwoClub>& clubs) {
  std::vector<std::vector<Vertex>> out;
  for (const TwoClub& c : clubs) out.push_back(c.members);
  return out;
}

}  // namespace

TEST(Clubs, WholeGraphWhenDiameterTwo) {
  const auto clubs = maximal_two_clubs(fx::k6_minus_edge());
  ASSERT_EQ(clubs.size(), 1u);
  EXPECT_EQ(clubs[0].members.size(), 6u);
  EXPECT_EQ(clubs[0].induced_diameter, 2u);
  EXPECT_TRUE(clubs[0].maximal);

  const auto reports = classify_clubs(fx::k6_minus_edge(), clubs);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].family, Family::coterie);
}

TEST(Clubs, PathOnFive) {
  const Graph p5 = fx::path(5);
  const auto clubs = maximal_two_clubs(p5, 3);
  const std::vector<std::vector<Vertex>> want{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}};
  EXPECT_EQ(members_of(clubs), want);
  EXPECT_EQ(members_of(clubs), fx::brute_force_clubs(p5, 3));
  for (const TypologyReport& r : classify_clubs(p5, clubs)) {
    EXPECT_EQ(r.family, Family::star);
    EXPECT_EQ(r.n, 3u);
  }
}

TEST(Clubs, PentagonIsItsOwnClub) {
  // C5 has diameter 2, so every 2-club inside it extends to the whole cycle.
  const Graph c5 = fx::cycle(5);
  const auto clubs = maximal_two_clubs(c5, 3);
  ASSERT_EQ(clubs.size(), 1u);
  EXPECT_EQ(clubs[0].members, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(members_of(clubs), fx::brute_force_clubs(c5, 3));
}

TEST(Clubs, NotHereditary) {
  // C5 is a 2-club, yet dropping one vertex leaves P4 of diameter 3.
  const Graph c5 = fx::cycle(5);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  const std::vector<Vertex> four{0, 1, 2, 3};
  EXPECT_TRUE(is_two_club(c5, all));
  EXPECT_FALSE(is_two_club(c5, four));

  // The consecutive triple {0,1,2} cannot grow by any single vertex, but it
  // does grow by two; a one-step maximality test would wrongly keep it.
  for (Vertex v : {3u, 4u}) {
    std::vector<Vertex> grown{0, 1, 2, v};
    EXPECT_FALSE(is_two_club(c5, grown));
  }
}

TEST(Clubs, HamletInsideALargerHost) {
  // H6 plus a pendant vertex 7 hanging from 2.
  const Graph host = fx::numbered(
      7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {6, 1}, {6, 3}, {7, 2}});
  const auto clubs = maximal_two_clubs(host, 4);
  const auto reports = classify_clubs(host, clubs);
  bool found = false;
  for (std::size_t i = 0; i < clubs.size(); ++i) {
    if (clubs[i].members == fx::ids(host, {"1", "2", "3", "4", "5", "6"})) {
      found = true;
      EXPECT_EQ(reports[i].family, Family::hamlet);
      EXPECT_EQ(reports[i].cell, (TypologyCell{4, 4}));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(members_of(clubs), fx::brute_force_clubs(host, 4));
}

TEST(Clubs, Errors) {
  EXPECT_EQ(fx::error_kind([] { maximal_two_clubs(fx::path(31)); }), ErrorKind::capacity);
  EXPECT_EQ(fx::error_kind([] { maximal_two_clubs(fx::path(5), 6); }), ErrorKind::invalid_argument);
  const Graph p5 = fx::path(5);
  const std::vector<TwoClub> bogus{TwoClub{{0, 1, 2, 3}, 3, true}};
  EXPECT_EQ(fx::error_kind([&] { classify_clubs(p5, bogus); }), ErrorKind::invalid_argument);
}

TEST(Clubs, MatchesBruteForceOnRandomHosts) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 10;
    const double p = 0.1 + 0.8 * static_cast<double>(t % 7) / 6.0;
    const Graph g = random_graph(n, p, trial_seed(31, t));
    const auto clubs = maximal_two_clubs(g);
    ASSERT_EQ(members_of(clubs), fx::brute_force_clubs(g, 1)) << "trial " << t;
    for (const TwoClub& c : clubs) {
      ASSERT_LE(fx::floyd_diameter(induced_subgraph(g, c.members)), 2u);
      ASSERT_TRUE(c.maximal);
    }
  }
}
