#include "matchbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "matchbounds/rounding.hpp"

namespace matchbounds {

namespace r = rounded;

LllResult lll_lower_bound(const std::vector<Rational>& probabilities,
                          const std::vector<std::vector<int>>& graph,
                          const std::vector<double>& x) {
  const std::size_t n = probabilities.size();
  require(graph.size() == n && x.size() == n, errc::dimension_mismatch,
          "probabilities, graph and x must have the same length");
  for (double xi : x)
    require(xi >= 0.0 && xi < 1.0, errc::bad_params, "x values must lie in [0,1)");

  for (std::size_t i = 0; i < n; ++i) {
    double rhs = x[i];
    for (int j : graph[i]) rhs = r::mul_down(rhs, r::sub_down(1.0, x[j]));
    if (probabilities[i] > rational_from_double(rhs))
      return {std::nullopt, static_cast<int>(i)};
  }
  double prod = 1.0;
  for (double xi : x) prod = r::mul_down(prod, r::sub_down(1.0, xi));
  return {std::max(prod, 0.0), std::nullopt};
}

BoundReport simple_lower_bound(const EventFamily& family, double epsilon) {
  require(std::isfinite(epsilon), errc::bad_epsilon, "epsilon must be finite");
  const Rational eps = rational_from_double(epsilon);
  require(eps > 0 && eps < Rational(14, 100), errc::bad_epsilon, "epsilon must lie in (0, 0.14)");

  BoundReport report;
  if (family.empty()) {
    report.lower = 1.0;
    return report;
  }
  const auto& stats = family.stats();
  const auto& members = family.members();
  const auto adj = conflict_graph(family);

  Rational max_p = 0, max_neighbor_sum = 0;
  std::vector<Rational> p(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    p[i] = event_probability(family.space(), members[i]);
    max_p = std::max(max_p, p[i]);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    Rational s = 0;
    for (int j : adj[i]) s += p[j];
    max_neighbor_sum = std::max(max_neighbor_sum, s);
  }

  const bool prob_ok = max_p < eps;
  const bool sum_ok = max_neighbor_sum < eps;
  report.validity.push_back({"event_probability_below_eps", to_double_up(max_p), epsilon, prob_ok});
  report.validity.push_back({"neighbor_sum_below_eps", to_double_up(max_neighbor_sum), epsilon, sum_ok});
  if (prob_ok && sum_ok) {
    const Rational exponent = (Rational(1) + 3 * eps) * stats.mu;
    report.lower = std::max(0.0, r::exp_down(-to_double_up(exponent)));
  }
  return report;
}

namespace {

/// Effective degree for size i: the tight value, or a caller override that
/// must not fall below it.
long long effective_degree(const FamilyStats& stats, const DegreeOverrides& d_override, int i) {
  const long long tight = stats.d.at(i);
  auto it = d_override.find(i);
  if (it == d_override.end()) return tight;
  require(it->second >= tight, errc::bad_params,
          "degree override below the tight degree for size " + std::to_string(i));
  return it->second;
}

/// sum_j d_j p_j in the space shrunk by `steps` embedding steps; empty when
/// the shrunk space cannot host some occurring size.
std::optional<Rational> degree_probability_sum(const EventFamily& family, int steps,
                                               const DegreeOverrides& d_override = {}) {
  const auto& stats = family.stats();
  Rational s = 0;
  for (int i : stats.sizes) {
    auto p = extension_probability_shrunk(family.space(), steps, i);
    if (!p) return std::nullopt;
    s += Rational(effective_degree(stats, d_override, i)) * *p;
  }
  return s;
}

bool shares_edge(const Matching& a, const Matching& b) {
  for (const auto& e : a.edges())
    if (b.contains_edge(e)) return true;
  return false;
}

} // namespace

BoundReport family_lower_bound(const EventFamily& family, const DegreeOverrides& d_override) {
  BoundReport report;
  if (family.empty()) {
    report.lower = 1.0;
    return report;
  }
  const auto& stats = family.stats();
  const auto sum = degree_probability_sum(family, 0, d_override);
  const Rational eight_r_sum = sum ? Rational(8) * stats.r * *sum : Rational(2);
  const bool applicable = sum && eight_r_sum <= 1;
  report.validity.push_back({"eight_r_degree_sum_at_most_one", to_double_up(eight_r_sum), 1.0, applicable});
  if (!applicable) return report;

  const Rational disc = Rational(1) - eight_r_sum; // >= 0
  const double denom = r::add_down(1.0, r::sqrt_down(to_double_down(disc)));
  double lower = 1.0;
  for (int i : stats.sizes) {
    const double p_up = to_double_up(extension_probability(family.space(), i));
    const double term = r::div_up(r::mul_up(2.0, p_up), denom);
    lower = r::mul_down(lower, r::pow1m_down(term, static_cast<double>(stats.count.at(i))));
  }
  report.lower = std::clamp(lower, 0.0, 1.0);
  return report;
}

SparsenessReport delta_sparseness(const EventFamily& family, std::optional<double> delta,
                                  const DegreeOverrides& d_override) {
  SparsenessReport rep;
  if (delta) require(*delta >= 0 && std::isfinite(*delta), errc::bad_params, "delta must be finite and nonnegative");
  if (family.empty()) {
    rep.cond1_no_subset_pair = rep.cond2_degree_sum = rep.cond3_overlap_sum = rep.cond4_r_delta = true;
    rep.chosen_delta = delta.value_or(0.0);
    return rep;
  }
  const auto& stats = family.stats();
  const auto& members = family.members();
  const auto& space = family.space();

  rep.cond1_no_subset_pair = true;
  for (std::size_t i = 0; i < members.size() && rep.cond1_no_subset_pair; ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if (members[j].contains(members[i])) {
        rep.cond1_no_subset_pair = false;
        break;
      }
    }

  // Overlap sums: for each F, the matchings M\F over members M that share an
  // edge with F without conflicting with it, as a set.
  rep.delta_min_cond3 = 0;
  for (const auto& f : members) {
    std::set<Matching> overlap;
    for (const auto& m : members) {
      if (m == f) continue;
      if (!shares_edge(m, f)) continue;
      if (in_conflict(m, f)) continue;
      overlap.insert(m.minus(f));
    }
    Rational s = 0;
    for (const auto& m : overlap) s += extension_probability(space, static_cast<int>(m.size()));
    rep.delta_min_cond3 = std::max(rep.delta_min_cond3, s);
  }

  rep.chosen_delta = delta ? *delta : to_double_up(rep.delta_min_cond3);
  const Rational delta_rat = rational_from_double(rep.chosen_delta);
  rep.cond3_overlap_sum = rep.delta_min_cond3 <= delta_rat;

  if (stats.r >= 1) {
    const auto shrunk_sum = degree_probability_sum(family, stats.r - 1, d_override);
    if (shrunk_sum) {
      rep.cond2_lhs = *shrunk_sum;
      rep.cond2_rhs = Rational(1, 8 * stats.r) - delta_rat;
      rep.cond2_degree_sum = rep.cond2_lhs < rep.cond2_rhs;
    }
  }
  rep.cond4_r_delta = Rational(16) * stats.r * delta_rat < 1;
  return rep;
}

std::optional<double> near_positive_epsilon(const EventFamily& family, double delta,
                                            const DegreeOverrides& d_override) {
  require(delta >= 0 && std::isfinite(delta), errc::bad_params, "delta must be finite and nonnegative");
  if (family.empty()) return 0.0;
  const auto& stats = family.stats();

  double prod = 1.0; // rounded down
  for (int step = 0; step < stats.r; ++step) {
    const auto sum = degree_probability_sum(family, step, d_override);
    if (!sum) return std::nullopt;
    const Rational disc = Rational(1) - Rational(8) * stats.r * *sum;
    if (disc < 0) return std::nullopt;
    const double factor = r::add_down(1.0, r::sqrt_down(to_double_down(disc))) / 2.0;
    prod = r::mul_down(prod, factor);
  }
  const double one_minus_2delta = r::sub_down(1.0, r::mul_up(2.0, delta));
  const double eps = r::sub_up(1.0, r::mul_down(std::max(one_minus_2delta, 0.0), prod));
  return std::clamp(eps, 0.0, 1.0);
}

BoundReport family_upper_bound(const EventFamily& family, double delta,
                               const DegreeOverrides& d_override) {
  BoundReport report;
  if (family.empty()) {
    report.upper = 1.0;
    return report;
  }
  const auto sparse = delta_sparseness(family, delta, d_override);
  report.validity.push_back({"cond1_no_subset_pair", sparse.cond1_no_subset_pair ? 1.0 : 0.0, std::nullopt,
                             sparse.cond1_no_subset_pair});
  report.validity.push_back({"cond2_degree_sum", to_double_up(sparse.cond2_lhs), to_double_down(sparse.cond2_rhs),
                             sparse.cond2_degree_sum});
  report.validity.push_back({"cond3_overlap_sum", to_double_up(sparse.delta_min_cond3), delta,
                             sparse.cond3_overlap_sum});
  report.validity.push_back({"cond4_16r_delta", 16.0 * family.stats().r * delta, 1.0, sparse.cond4_r_delta});
  if (!sparse.holds()) return report;

  const auto eps = near_positive_epsilon(family, delta, d_override);
  report.validity.push_back({"near_positive_epsilon_defined", eps ? *eps : -1.0, std::nullopt, eps.has_value()});
  if (!eps) return report;

  const auto& stats = family.stats();
  double upper = 1.0; // rounded up
  const double factor_down = r::sub_down(1.0, *eps);
  for (int i : stats.sizes) {
    const double term = r::mul_down(std::max(factor_down, 0.0), to_double_down(extension_probability(family.space(), i)));
    upper = r::mul_up(upper, r::pow1m_up(term, static_cast<double>(stats.count.at(i))));
  }
  report.upper = std::clamp(upper, 0.0, 1.0);
  return report;
}

std::optional<double> reembedding_ratio_bound(const EventFamily& family) {
  if (family.empty()) return 1.0;
  const auto& stats = family.stats();
  const auto sum = degree_probability_sum(family, 0);
  if (!sum) return std::nullopt;
  const Rational disc = Rational(1) - Rational(8) * stats.r * *sum;
  if (disc < 0) return std::nullopt;
  return r::div_up(2.0, r::add_down(1.0, r::sqrt_down(to_double_down(disc))));
}

BoundReport asymptotic_bracket(const EventFamily& family) {
  BoundReport report;
  if (family.empty()) {
    report.lower = report.upper = report.asymptotic = 1.0;
    return report;
  }
  const auto& stats = family.stats();
  require(stats.regular, errc::not_regular, "asymptotic bracket needs a regular family");

  auto lower = family_lower_bound(family);
  report.lower = lower.lower;
  for (auto& f : lower.validity) report.validity.push_back(std::move(f));

  const auto sparse = delta_sparseness(family, std::nullopt);
  auto upper = family_upper_bound(family, sparse.chosen_delta);
  report.upper = upper.upper;
  for (auto& f : upper.validity) report.validity.push_back(std::move(f));

  const double mu = to_double_up(stats.mu);
  report.asymptotic = std::exp(-mu);

  // The o(.) hypotheses cannot be decided at a single N; report the
  // dimensionless ratios instead so callers can judge the regime.
  const double n = static_cast<double>(family.space().n());
  report.validity.push_back(
      {"mu_r32_over_sqrt_n_ratio", mu * std::pow(static_cast<double>(stats.r), 1.5) / std::sqrt(n), std::nullopt, true});
  report.validity.push_back({"delta_mu_ratio", sparse.chosen_delta * mu, std::nullopt, true});
  return report;
}

QuotientResult quotient_events(const EventFamily& family, const std::vector<std::vector<int>>& partition) {
  const int m = static_cast<int>(family.size());
  std::vector<int> cls(m, -1);
  for (std::size_t c = 0; c < partition.size(); ++c)
    for (int idx : partition[c]) {
      require(idx >= 0 && idx < m, errc::bad_partition, "partition index out of range");
      require(cls[idx] == -1, errc::bad_partition, "partition covers a member twice");
      cls[idx] = static_cast<int>(c);
    }
  for (int i = 0; i < m; ++i)
    require(cls[i] != -1, errc::bad_partition, "partition misses member " + std::to_string(i));

  const auto& members = family.members();
  // Members of one class must define mutually exclusive events; for canonical
  // events that is exactly pairwise conflict.
  for (const auto& klass : partition)
    for (std::size_t a = 0; a < klass.size(); ++a)
      for (std::size_t b = a + 1; b < klass.size(); ++b)
        require(in_conflict(members[klass[a]], members[klass[b]]), errc::class_not_exclusive,
                "class members must pairwise conflict");

  QuotientResult out;
  const int k = static_cast<int>(partition.size());
  std::vector<std::set<int>> adj(k);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (cls[i] == cls[j]) continue;
      if (in_conflict(members[i], members[j])) {
        adj[cls[i]].insert(cls[j]);
        adj[cls[j]].insert(cls[i]);
      }
    }
  out.adjacency.resize(k);
  for (int c = 0; c < k; ++c) out.adjacency[c].assign(adj[c].begin(), adj[c].end());
  out.class_probability.resize(k, Rational(0));
  for (int i = 0; i < m; ++i)
    out.class_probability[cls[i]] += event_probability(family.space(), members[i]);
  return out;
}

} // namespace matchbounds
