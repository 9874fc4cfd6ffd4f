#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "matchbounds/matching.hpp"
#include "matchbounds/numeric.hpp"

namespace matchbounds {

/// Derived statistics of a family of matchings.
struct FamilyStats {
  int r = 0;                      ///< maximum member size
  std::vector<int> sizes;         ///< occurring sizes I, ascending
  std::map<int, long long> count; ///< |family_i| per size
  std::map<int, long long> d;     ///< tight max vertex degree per size
  Rational mu;                    ///< sum of member event probabilities
  bool regular = false;           ///< identical per-size incidence at every vertex
};

/// A collection of distinct partial matchings inside one space. Members are
/// canonical and immutable after construction; statistics are computed once
/// on first use and shared across copies.
class EventFamily {
public:
  EventFamily(MatchingSpace space, std::vector<Matching> members);

  const MatchingSpace& space() const { return space_; }
  const std::vector<Matching>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const FamilyStats& stats() const;

private:
  MatchingSpace space_;
  std::vector<Matching> members_;

  struct StatsCell {
    std::once_flag once;
    std::optional<FamilyStats> value;
  };
  std::shared_ptr<StatsCell> stats_cell_;
};

/// Probability that a fixed size-|m| matching extends to a uniform perfect
/// matching: 1/((N-1)(N-3)...(N-2i+1)) in K_N, 1/(N(N-1)...(N-i+1)) in
/// K_{N,M}. Depends only on |m|. General spaces are served by the oracle.
Rational event_probability(const MatchingSpace& space, const Matching& m);

/// Same quantity as a function of the size alone.
Rational extension_probability(const MatchingSpace& space, int size);

/// Extension probability for a size-i matching after `steps` embedding steps
/// are removed (K_{N-2 steps} for complete, left side N-steps for bipartite).
/// nullopt when the shrunk space is too small to host a size-i matching.
std::optional<Rational> extension_probability_shrunk(const MatchingSpace& space, int steps, int size);

/// Simple graph on member indices with an edge exactly when the two members
/// are in conflict; this is the negative dependency graph of the canonical
/// events. Adjacency lists are sorted.
std::vector<std::vector<int>> conflict_graph(const EventFamily& family);

/// Exact statistics (tight degrees, rational mu, regularity flag).
/// Throws empty_family on an empty family.
const FamilyStats& family_stats(const EventFamily& family);

} // namespace matchbounds
