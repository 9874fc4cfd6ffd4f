#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchbounds/family.hpp"
#include "matchbounds/matching.hpp"
#include "matchbounds/numeric.hpp"
#include "matchbounds/oracle.hpp"

namespace matchbounds {

/// Prescribed degrees d_1..d_n with even sum N = sum d_i.
class DegreeSequence {
public:
  explicit DegreeSequence(std::vector<int> degrees);
  static DegreeSequence regular(int n, int d);

  const std::vector<int>& degrees() const { return degrees_; }
  int n() const { return static_cast<int>(degrees_.size()); }
  int total() const { return total_; } ///< number of mini-vertices N

  /// Class of mini-vertex index 0..N-1 (contiguous blocks of size d_i).
  int class_of(int mini) const;
  /// Mini-vertex index range [begin, end) of class c.
  std::pair<int, int> block(int c) const;

private:
  std::vector<int> degrees_;
  std::vector<int> offsets_;
  int total_ = 0;
};

/// Multigraph on n vertices as a sorted edge multiset; loops allowed.
/// A loop contributes 2 to its endpoint's degree.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<std::pair<int, int>, int>> edges; ///< ((u<=v) 0-based, multiplicity)

  bool has_loop() const;
  bool has_multi_edge() const;
  std::vector<int> degrees() const;
};

/// Projects a perfect matching of the mini-vertices (partner array over
/// 0..N-1) onto the multigraph with the prescribed degrees.
MultiGraph project(const std::vector<int>& partner, const DegreeSequence& dseq);

/// Projects a perfect matching given with 1-based vertex labels 1..N.
/// Throws not_perfect unless the matching covers [N] exactly.
MultiGraph project(const Matching& matching, const DegreeSequence& dseq);

/// Uniform perfect matching of {1..total} by sequentially pairing the lowest
/// unmatched mini-vertex with a uniformly chosen other; deterministic for
/// fixed (seed, counter).
Matching sample_perfect_matching(int total, std::uint64_t seed, std::uint64_t counter = 0);

/// One uniform configuration-model sample; deterministic for fixed
/// (seed, counter).
MultiGraph sample_multigraph(const DegreeSequence& dseq, std::uint64_t seed, std::uint64_t counter = 0);

/// Length of the shortest cycle: 1 for a loop, 2 for a multi-edge, BFS on
/// the simple support otherwise; empty for forests.
std::optional<int> girth(const MultiGraph& g);

/// Equivalent to girth(g) >= bound (with acyclic counting as infinity), with
/// early exit; this is the hot path of the Monte Carlo estimator.
bool girth_at_least(const MultiGraph& g, int bound);

/// exp(-sum_{i=1}^{g-1} (d-1)^i / (2i)), the limiting probability that a
/// random d-regular multigraph has girth at least g.
double girth_prediction(int d, int g);

struct McEstimate {
  double estimate = 0;
  double standard_error = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
};

/// Fraction of samples with girth at least g, with binomial standard error.
/// Per-trial streams are keyed by (seed, trial), so the result is invariant
/// to the worker count. `record` (optional) receives (trial, girth) pairs in
/// trial order for CSV-style dumps.
McEstimate mc_girth_at_least(const DegreeSequence& dseq, int g, long long trials, std::uint64_t seed,
                             int threads = 1,
                             std::vector<std::optional<int>>* record = nullptr);

/// Exact fraction of the (N-1)!! mini-vertex matchings whose projection has
/// girth at least g. Brute force; guarded by the oracle limits.
Rational exact_girth_probability(const DegreeSequence& dseq, int g, const OracleLimits& limits = {});

/// The family of all mini-vertex matchings projecting to a cycle of length
/// 1..g-1, inside the complete space on the mini-vertices. Feeding it to the
/// bounds machinery reproduces the girth predictions.
EventFamily cycle_event_family(const DegreeSequence& dseq, int g, std::size_t max_members = 2'000'000);

struct LogValue {
  double log_value = 0;
  double value = 0; ///< exp(log_value); +inf when it overflows
};

struct RegularCountEstimates {
  LogValue simple_count;        ///< e^{(1-d^2)/4} (dn)! / ((dn/2)! 2^{dn/2} (d!)^n)
  LogValue girth_at_least_count; ///< same with e^{-sum (d-1)^i/(2i)} up to g-1
};

/// Asymptotic count formulas for labelled d-regular graphs (girth >= 3) and
/// d-regular graphs with girth >= g, evaluated in log space.
RegularCountEstimates regular_count_estimates(int n, int d, int g);

/// Number of labelled simple d-regular graphs on n vertices, by exhaustive
/// search with degree pruning. Returns 0 when nd is odd.
Int exact_regular_count(int n, int d);

} // namespace matchbounds
