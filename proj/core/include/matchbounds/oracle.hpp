#pragma once

#include <functional>
#include <vector>

#include "matchbounds/family.hpp"
#include "matchbounds/matching.hpp"
#include "matchbounds/numeric.hpp"

namespace matchbounds {

/// Size guards for the brute-force paths. The defaults keep every operation
/// at desk scale (a few million matchings at most).
struct OracleLimits {
  int complete_max = 16;  ///< max N for K_N enumeration
  int bipartite_max = 10; ///< max N for K_{N,M} enumeration
  int general_max = 16;   ///< max vertex count for general graphs
};

/// Enumerates every perfect matching exactly once, in the deterministic
/// order given by repeatedly matching the first uncovered vertex with
/// partners in increasing label order. The callback receives the partner
/// array over dense vertex indices (-1 for uncovered left vertices in
/// bipartite spaces with M < N).
void for_each_perfect_matching(const MatchingSpace& space,
                               const std::function<void(const std::vector<int>&)>& cb,
                               const OracleLimits& limits = {});

/// Exact number of perfect matchings: (N-1)!! for K_N, N(N-1)...(N-M+1) for
/// K_{N,M}, enumeration count for general graphs.
Int perfect_matching_count(const MatchingSpace& space, const OracleLimits& limits = {});

/// Materialized enumeration in canonical form.
std::vector<Matching> all_perfect_matchings(const MatchingSpace& space, const OracleLimits& limits = {});

/// Fraction of perfect matchings containing no member of the family.
/// Throws no_perfect_matching when the space has none.
Rational exact_avoid_probability(const EventFamily& family, const OracleLimits& limits = {});

struct DependencyViolation {
  int member = 0;           ///< index i of the conditioned event
  std::vector<int> subset;  ///< indices of the conditioning non-neighbors
  Rational lhs;             ///< conditional probability (or joint, for exclusivity)
  Rational rhs;             ///< the bound it had to satisfy
};

struct DependencyCheckReport {
  long long checked_pairs = 0; ///< (i, S) pairs with a well-defined conditional
  std::vector<DependencyViolation> violations;
  bool truncated = false; ///< some member had more non-neighbors than the cap
  bool passed = false;
};

/// Exhaustively verifies that conditioning on any subset of non-neighbours
/// never increases a member's probability (the negative dependency graph
/// property), over all subsets of the first `max_subset` non-neighbors of
/// each member. Exact rational arithmetic; zero-probability conditioning
/// events are skipped as not well-defined.
DependencyCheckReport check_negative_dependency(const EventFamily& family, int max_subset = 12,
                                                const OracleLimits& limits = {});

/// Exhaustively verifies both parts of the epsilon-near-positive property:
/// conflicting members never co-occur, and conditioning on non-neighbour
/// complements keeps each member's probability above (1-epsilon) times its
/// unconditional value.
DependencyCheckReport check_near_positive(const EventFamily& family, double epsilon, int max_subset = 12,
                                          const OracleLimits& limits = {});

} // namespace matchbounds
