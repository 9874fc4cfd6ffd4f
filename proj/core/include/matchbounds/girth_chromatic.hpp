#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchbounds/config_model.hpp"
#include "matchbounds/numeric.hpp"

namespace matchbounds {

/// Probability that a uniform perfect matching of K_N leaves no edge inside
/// a fixed s-subset: 2^s C(N/2, s) / C(N, s). Zero for s > N/2.
Rational traversal_probability(int n, int s);

struct TraversalAsymptotic {
  double leading = 0;                ///< exp(-N x^2 / 2)
  double stirling = 0;               ///< entropy-based sharpening of the exact formula
  std::optional<double> exact;       ///< exact value when xN is an integer
  bool in_regime = false;            ///< ln^2 N / N^{1/3} <= x <= 1/4
};

/// Leading-order traversal probability at subset fraction x, with the
/// Stirling/entropy cross-check and the exact value when it applies.
TraversalAsymptotic traversal_asymptotic(int n, double x);

struct DegreeStats {
  long long volume = 0; ///< sum of all degrees
  int delta_max = 0;    ///< maximum degree
  Rational dbar;        ///< average degree
  Rational dtilde;      ///< second-order average degree, sum d_i^2 / sum d_i
};

DegreeStats degree_stats(const DegreeSequence& dseq);

/// Vol(S) = sum of degrees over the 0-based vertex subset.
long long volume(const DegreeSequence& dseq, const std::vector<int>& subset);

enum class ColorBoundPolicy {
  /// Compare leading exponents only; the lower-order term of the coloring
  /// bound has an unspecified constant, so a failed comparison yields
  /// `indeterminate` rather than a refutation.
  leading_term,
};

struct CertificateCondition {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

/// Everything needed to judge whether the degree sequence admits a graph
/// with girth above ell and chromatic number at least k at this size:
/// the three applicability conditions, the near-positivity defect epsilon,
/// and the two log-probability bounds whose comparison decides the verdict.
struct ExistenceCertificate {
  std::vector<CertificateCondition> conditions;
  double epsilon = 0;
  double log_girth_bound = 0; ///< log of the girth > ell probability bound
  double log_color_bound = 0; ///< log of the k-colorability probability bound
  double margin = 0;
  std::string policy;
  std::string verdict; ///< "holds" | "conditions_fail" | "indeterminate"
  std::vector<std::string> reasons;
};

/// Certificate at the given k and ell. Verdict is `holds` only when all
/// conditions pass, epsilon < 1/8, and the girth bound dominates the
/// coloring bound by more than `margin` (relative to the smaller magnitude).
ExistenceCertificate existence_certificate(const DegreeSequence& dseq, int k, int ell,
                                           double margin = 0.10,
                                           ColorBoundPolicy policy = ColorBoundPolicy::leading_term);

} // namespace matchbounds
