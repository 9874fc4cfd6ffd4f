#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchbounds/family.hpp"
#include "matchbounds/numeric.hpp"

namespace matchbounds {

/// One named hypothesis with the two sides of the inequality that was
/// checked. Ratio-style diagnostics carry no rhs and hold vacuously.
struct ValidityFlag {
  std::string name;
  double lhs = 0;
  std::optional<double> rhs;
  bool holds = true;
};

/// A computed bracket. Inapplicable sides are empty; the validity flags say
/// which hypothesis failed. Lower bounds are rounded toward -inf and upper
/// bounds toward +inf, so a reported bracket never overstates tightness.
struct BoundReport {
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> asymptotic; ///< e^{-mu} reference value when relevant
  std::vector<ValidityFlag> validity;
};

struct LllResult {
  std::optional<double> bound;        ///< product of (1-x_i), rounded down
  std::optional<int> violated_index;  ///< first index failing the hypothesis
};

/// Generic Lovasz Local Lemma evaluation on an explicit negative dependency
/// graph: if Pr(A_i) <= x_i prod_{ij in E} (1-x_j) for every i, the
/// probability that no event occurs is at least prod (1-x_i).
LllResult lll_lower_bound(const std::vector<Rational>& probabilities,
                          const std::vector<std::vector<int>>& graph,
                          const std::vector<double>& x);

/// Lower bound exp(-(1+3 eps) mu), valid when every event probability and
/// every conflict-neighborhood probability sum stays below eps < 0.14.
BoundReport simple_lower_bound(const EventFamily& family, double epsilon);

/// Per-size replacements for the tight degrees d_i. The formulas stay valid
/// for any upper bound on the true degree, so overrides must not fall below
/// the tight value (they only make bounds weaker).
using DegreeOverrides = std::map<int, long long>;

/// Product lower bound for matching families:
/// prod_i (1 - 2 p_i / (1 + sqrt(1 - 8 r sum_j d_j p_j)))^{|family_i|},
/// applicable when 8 r sum_j d_j p_j <= 1.
BoundReport family_lower_bound(const EventFamily& family, const DegreeOverrides& d_override = {});

/// The four sparseness conditions enabling the upper bound. All booleans are
/// decided in exact rational arithmetic.
struct SparsenessReport {
  bool cond1_no_subset_pair = false; ///< no member contained in another
  bool cond2_degree_sum = false;     ///< sum_j d_j p'_j < 1/(8r) - delta
  bool cond3_overlap_sum = false;    ///< every overlap sum is at most delta
  bool cond4_r_delta = false;        ///< 16 r delta < 1
  Rational delta_min_cond3;          ///< exact supremum of the overlap sums
  double chosen_delta = 0;
  Rational cond2_lhs;
  Rational cond2_rhs;
  bool holds() const { return cond1_no_subset_pair && cond2_degree_sum && cond3_overlap_sum && cond4_r_delta; }
};

/// Evaluates the sparseness conditions at `delta`, or, with nullopt, at the
/// smallest delta satisfying the overlap condition (re-checking the others).
SparsenessReport delta_sparseness(const EventFamily& family, std::optional<double> delta = std::nullopt,
                                  const DegreeOverrides& d_override = {});

/// The near-positivity defect: conditioning a member on any set of
/// non-neighbour complements keeps its probability within (1-epsilon) of the
/// unconditional value. Requires the sparseness conditions; empty when a
/// discriminant goes negative. Rounded up.
std::optional<double> near_positive_epsilon(const EventFamily& family, double delta,
                                            const DegreeOverrides& d_override = {});

/// Upper bound prod_M (1 - (1-eps) Pr(A_M)) with eps from
/// near_positive_epsilon; inapplicable when sparseness fails at delta.
BoundReport family_upper_bound(const EventFamily& family, double delta,
                               const DegreeOverrides& d_override = {});

/// Upper bound on Pr(avoid all, re-embedded two vertices up) / Pr(avoid all):
/// 2/(1+sqrt(1-8 r sum_j d_j p_j)); empty when the discriminant is negative.
std::optional<double> reembedding_ratio_bound(const EventFamily& family);

/// For regular families: product lower bound, upper bound at the automatic
/// delta, and the Poisson-style reference e^{-mu}, with dimensionless ratios
/// describing how deep the instance sits in the asymptotic regime.
BoundReport asymptotic_bracket(const EventFamily& family);

struct QuotientResult {
  std::vector<std::vector<int>> adjacency;  ///< quotient graph over classes
  std::vector<Rational> class_probability;  ///< sum of member probabilities
};

/// Collapses the conflict graph onto a partition of the members. Classes must
/// be pairwise-conflicting inside (canonical events of conflicting matchings
/// are mutually exclusive); two classes are adjacent when any cross pair
/// conflicts.
QuotientResult quotient_events(const EventFamily& family, const std::vector<std::vector<int>>& partition);

} // namespace matchbounds
