#include "acq/clubs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "acq/error.hpp"

namespace acq {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

// Branch and bound over (chosen, candidates). Candidates that cannot reach
// every chosen vertex within two steps inside chosen + candidates are
// dropped; a branch dies when two chosen vertices can no longer be joined
// that way, or when some outside vertex is adjacent to everything that
// could still be chosen (every club reachable from here would then extend).
class ClubSearch {
 public:
  ClubSearch(const Graph& g, std::size_t min_size)
      : n_(g.vertex_count()), min_size_(min_size), adj_(g.vertex_count(), 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= bit(e.v);
      adj_[e.v] |= bit(e.u);
    }
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  std::vector<Mask> run() {
    descend(0, all_);
    return found_;
  }

 private:
  Mask within_two(Vertex s, Mask universe) const {
    Mask reach = bit(s) | (adj_[s] & universe);
    for (Mask f = adj_[s] & universe; f != 0; f &= f - 1) {
      reach |= adj_[std::countr_zero(f)] & universe;
    }
    return reach;
  }

  bool reduce(Mask chosen, Mask& candidates) const {
    while (true) {
      const Mask universe = chosen | candidates;
      Mask keep = candidates;
      for (Mask c = chosen; c != 0; c &= c - 1) {
        const Mask reach = within_two(static_cast<Vertex>(std::countr_zero(c)), universe);
        if ((chosen & ~reach) != 0) return false;
        keep &= reach;
      }
      if (keep == candidates) return true;
      candidates = keep;
    }
  }

  bool two_club(Mask members) const {
    for (Mask c = members; c != 0; c &= c - 1) {
      if ((members & ~within_two(static_cast<Vertex>(std::countr_zero(c)), members)) != 0) {
        return false;
      }
    }
    return true;
  }

  // True when some 2-club strictly contains `base`. Clubs are not
  // hereditary, so single-vertex additions are not enough to decide this.
  bool extends(Mask base, Mask chosen, Mask candidates) const {
    if (!reduce(chosen, candidates)) return false;
    const Mask universe = chosen | candidates;
    if (universe == base) return false;
    if (two_club(universe)) return true;
    if (candidates == 0) return false;
    const Mask v = candidates & -candidates;
    return extends(base, chosen | v, candidates & ~v) || extends(base, chosen, candidates & ~v);
  }

  void descend(Mask chosen, Mask candidates) {
    if (!reduce(chosen, candidates)) return;
    const Mask universe = chosen | candidates;
    if (static_cast<std::size_t>(std::popcount(universe)) < min_size_ || universe == 0) return;
    for (Mask out = all_ & ~universe; out != 0; out &= out - 1) {
      if ((adj_[std::countr_zero(out)] & universe) == universe) return;
    }
    if (candidates == 0) {
      if (!extends(chosen, chosen, all_ & ~chosen)) found_.push_back(chosen);
      return;
    }
    const Mask v = candidates & -candidates;
    descend(chosen | v, candidates & ~v);
    descend(chosen, candidates & ~v);
  }

  std::size_t n_;
  std::size_t min_size_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  std::vector<Mask> found_;
};

}  // namespace

bool is_two_club(const Graph& g, std::span<const Vertex> members) {
  if (members.empty()) return false;
  return metric_profile(induced_subgraph(g, members)).diameter <= 2;
}

std::vector<TwoClub> maximal_two_clubs(const Graph& g, std::size_t min_size,
                                       std::size_t node_cap) {
  const std::size_t n = g.vertex_count();
  if (n > node_cap) {
    fail(ErrorKind::capacity, "2-club mining limited to " + std::to_string(node_cap) +
                                  " vertices, got " + std::to_string(n));
  }
  if (n > 64) fail(ErrorKind::capacity, "2-club mining supports at most 64 vertices");
  if (min_size > n) fail(ErrorKind::invalid_argument, "min_size exceeds the vertex count");

  std::vector<TwoClub> clubs;
  for (Mask m : ClubSearch(g, std::max<std::size_t>(min_size, 1)).run()) {
    TwoClub club;
    for (; m != 0; m &= m - 1) club.members.push_back(static_cast<Vertex>(std::countr_zero(m)));
    club.induced_diameter = metric_profile(induced_subgraph(g, club.members)).diameter;
    if (club.induced_diameter > 2) {
      fail(ErrorKind::precondition, "mined set failed 2-club verification");
    }
    club.maximal = true;
    clubs.push_back(std::move(club));
  }
  std::sort(clubs.begin(), clubs.end(), [](const TwoClub& a, const TwoClub& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.members < b.members;
  });
  return clubs;
}

std::vector<TypologyReport> classify_clubs(const Graph& g, const std::vector<TwoClub>& clubs) {
  std::vector<TypologyReport> reports;
  reports.reserve(clubs.size());
  for (const TwoClub& club : clubs) {
    for (Vertex v : club.members) g.require_vertex(v);
    if (!is_two_club(g, club.members)) {
      fail(ErrorKind::invalid_argument, "club is not a 2-club of the host graph");
    }
    reports.push_back(classify(induced_subgraph(g, club.members)));
  }
  return reports;
}

}  // namespace acq
