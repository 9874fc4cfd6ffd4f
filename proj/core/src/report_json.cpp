#include "matchbounds/report_json.hpp"

#include <cmath>
#include <cstdio>

namespace matchbounds {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

Json optional_double(const std::optional<double>& x) {
  if (!x) return nullptr;
  return format_double(*x);
}

} // namespace

Json to_json(const Matching& m) {
  Json edges = Json::array();
  for (const auto& [a, b] : m.edges()) edges.push_back(Json::array({a, b}));
  return edges;
}

Json to_json(const FamilyStats& stats) {
  Json d = Json::object(), count = Json::object();
  for (int i : stats.sizes) {
    d[std::to_string(i)] = stats.d.at(i);
    count[std::to_string(i)] = stats.count.at(i);
  }
  return Json{{"r", stats.r},
              {"sizes", stats.sizes},
              {"count", count},
              {"d", d},
              {"mu", rational_string(stats.mu)},
              {"mu_value", format_double(to_double_up(stats.mu))},
              {"regular", stats.regular}};
}

Json to_json(const ValidityFlag& flag) {
  Json j{{"name", flag.name}, {"lhs", format_double(flag.lhs)}};
  if (flag.rhs) j["rhs"] = format_double(*flag.rhs);
  j["holds"] = flag.holds;
  return j;
}

Json to_json(const BoundReport& report) {
  Json validity = Json::array();
  for (const auto& flag : report.validity) validity.push_back(to_json(flag));
  return Json{{"lower", optional_double(report.lower)},
              {"upper", optional_double(report.upper)},
              {"asymptotic", optional_double(report.asymptotic)},
              {"validity", validity}};
}

Json to_json(const SparsenessReport& report) {
  return Json{{"cond1_no_subset_pair", report.cond1_no_subset_pair},
              {"cond2_degree_sum", report.cond2_degree_sum},
              {"cond3_overlap_sum", report.cond3_overlap_sum},
              {"cond4_16r_delta", report.cond4_r_delta},
              {"holds", report.holds()},
              {"delta_min_cond3", rational_string(report.delta_min_cond3)},
              {"chosen_delta", format_double(report.chosen_delta)},
              {"cond2_lhs", rational_string(report.cond2_lhs)},
              {"cond2_rhs", rational_string(report.cond2_rhs)}};
}

Json to_json(const DependencyCheckReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(Json{{"member", v.member},
                              {"subset", v.subset},
                              {"lhs", rational_string(v.lhs)},
                              {"rhs", rational_string(v.rhs)}});
  return Json{{"checked_pairs", report.checked_pairs},
              {"passed", report.passed},
              {"truncated", report.truncated},
              {"violations", violations}};
}

Json to_json(const McEstimate& estimate) {
  return Json{{"estimate", format_double(estimate.estimate)},
              {"stderr", format_double(estimate.standard_error)},
              {"trials", estimate.trials},
              {"seed", estimate.seed}};
}

Json to_json(const LatinBoundsReport& report) {
  return Json{{"lower", format_double(report.lower)},
              {"log_lower", format_double(report.log_lower)},
              {"upper", optional_double(report.upper)},
              {"log_upper", optional_double(report.log_upper)},
              {"stein", format_double(report.stein)},
              {"log_stein", format_double(report.log_stein)}};
}

Json to_json(const RegularCountEstimates& estimates) {
  return Json{{"simple_count", format_double(estimates.simple_count.value)},
              {"log_simple_count", format_double(estimates.simple_count.log_value)},
              {"girth_count", format_double(estimates.girth_at_least_count.value)},
              {"log_girth_count", format_double(estimates.girth_at_least_count.log_value)}};
}

Json to_json(const ExistenceCertificate& cert) {
  Json conditions = Json::array();
  for (const auto& c : cert.conditions)
    conditions.push_back(Json{{"name", c.name},
                              {"lhs", format_double(c.lhs)},
                              {"rhs", format_double(c.rhs)},
                              {"holds", c.holds}});
  return Json{{"conditions", conditions},
              {"epsilon", format_double(cert.epsilon)},
              {"log_girth_bound", format_double(cert.log_girth_bound)},
              {"log_color_bound", format_double(cert.log_color_bound)},
              {"margin", format_double(cert.margin)},
              {"policy", cert.policy},
              {"verdict", cert.verdict},
              {"reasons", cert.reasons}};
}

Json to_json(const TraversalAsymptotic& asymptotic) {
  return Json{{"leading", format_double(asymptotic.leading)},
              {"stirling", format_double(asymptotic.stirling)},
              {"exact", optional_double(asymptotic.exact)},
              {"in_regime", asymptotic.in_regime}};
}

Json to_json(const QuotientResult& quotient) {
  Json probs = Json::array();
  for (const auto& p : quotient.class_probability) probs.push_back(rational_string(p));
  return Json{{"adjacency", quotient.adjacency}, {"class_probability", probs}};
}

} // namespace matchbounds
