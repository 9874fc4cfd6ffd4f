#include "matchbounds/girth_chromatic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace matchbounds {

Rational traversal_probability(int n, int s) {
  require(n >= 2 && n % 2 == 0, errc::bad_params, "traversal probability needs even N >= 2");
  require(s >= 0 && s <= n, errc::bad_params, "need 0 <= s <= N");
  if (s > n / 2) return 0;
  Rational p = Rational(Int(1) << s) * Rational(binomial(n / 2, s));
  return p / Rational(binomial(n, s));
}

namespace {

double entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

} // namespace

TraversalAsymptotic traversal_asymptotic(int n, double x) {
  require(n >= 2 && n % 2 == 0, errc::bad_params, "traversal asymptotic needs even N >= 2");
  require(x > 0.0 && x < 0.5, errc::bad_params, "x must lie in (0, 1/2)");
  TraversalAsymptotic out;
  const double nd = static_cast<double>(n);
  out.leading = std::exp(-nd * x * x / 2.0);
  out.stirling = std::sqrt((1.0 - x) / (1.0 - 2.0 * x))
                 * std::exp(nd * (0.5 * entropy(2.0 * x) - entropy(x) + x * std::log(2.0)));
  const double lo = std::pow(std::log(nd), 2) / std::cbrt(nd);
  out.in_regime = (x >= lo && x <= 0.25);
  const double xn = x * nd;
  if (std::abs(xn - std::llround(xn)) < 1e-9) {
    const int s = static_cast<int>(std::llround(xn));
    if (s >= 0 && s <= n) out.exact = rational_to_double(traversal_probability(n, s));
  }
  return out;
}

DegreeStats degree_stats(const DegreeSequence& dseq) {
  DegreeStats st;
  Int sum = 0, sum_sq = 0;
  for (int d : dseq.degrees()) {
    sum += d;
    sum_sq += Int(d) * d;
    st.delta_max = std::max(st.delta_max, d);
  }
  st.volume = static_cast<long long>(dseq.total());
  st.dbar = Rational(sum) / dseq.n();
  st.dtilde = Rational(sum_sq) / Rational(sum);
  return st;
}

long long volume(const DegreeSequence& dseq, const std::vector<int>& subset) {
  long long v = 0;
  for (int i : subset) {
    require(i >= 0 && i < dseq.n(), errc::bad_vertex, "subset vertex out of range");
    v += dseq.degrees()[i];
  }
  return v;
}

ExistenceCertificate existence_certificate(const DegreeSequence& dseq, int k, int ell, double margin,
                                           ColorBoundPolicy policy) {
  require(k >= 2, errc::bad_params, "need k >= 2");
  require(ell >= 1, errc::bad_params, "need ell >= 1");
  require(margin >= 0, errc::bad_params, "margin must be nonnegative");

  ExistenceCertificate cert;
  cert.margin = margin;
  cert.policy = policy == ColorBoundPolicy::leading_term ? "leading_term" : "unknown";

  const auto st = degree_stats(dseq);
  const long long n_vertices = dseq.n();
  const long long total = dseq.total(); // N
  const Rational dt1 = st.dtilde - 1;   // dtilde - 1

  // exact rational decisions for the three applicability conditions
  Rational pow_ell = 1, pow_ell_1 = 1;
  for (int i = 0; i < ell; ++i) pow_ell *= dt1;
  for (int i = 0; i < ell - 1; ++i) pow_ell_1 *= dt1;

  const bool suru = st.dtilde >= 3;
  cert.conditions.push_back({"dtilde_at_least_3", to_double_up(st.dtilde), 3.0, suru});
  const Rational kas_lhs = Rational(8) * k * k * pow_ell;
  const bool kas = kas_lhs < total;
  cert.conditions.push_back({"second_moment_growth", to_double_up(kas_lhs), static_cast<double>(total), kas});
  const Rational deltas_lhs = Rational(4) * ell * st.delta_max * pow_ell_1;
  const Rational deltas_rhs = Rational(total, 10);
  const bool deltas = deltas_lhs < deltas_rhs;
  cert.conditions.push_back({"degree_tail", to_double_up(deltas_lhs), to_double_down(deltas_rhs), deltas});

  const bool room = total - 2LL * ell + 1 > 0;
  if (!room)
    cert.reasons.push_back("cycle length exceeds the matching space (N - 2 ell + 1 <= 0)");

  const double nd = static_cast<double>(total);
  double log_shrink = 0; // ell * (ln N - ln(N - 2 ell + 1))
  double log_dt1 = 0;
  bool dt1_positive = dt1 > 0;
  if (room && dt1_positive) {
    log_shrink = ell * (std::log(nd) - std::log(nd - 2.0 * ell + 1.0));
    log_dt1 = std::log(rational_to_double(dt1));
    cert.epsilon = std::exp(std::log(4.0 * ell * st.delta_max / nd) + (ell - 1) * log_dt1 + log_shrink);
    cert.log_girth_bound = -(1.0 + 2.0 * cert.epsilon) * 2.0 * std::exp(ell * log_dt1 + log_shrink);
  } else {
    cert.epsilon = std::numeric_limits<double>::infinity();
    cert.log_girth_bound = -std::numeric_limits<double>::infinity();
  }
  cert.log_color_bound = n_vertices * std::log(2.0) - nd / (2.0 * static_cast<double>(k) * k);

  const bool eps_ok = cert.epsilon < 0.125;
  cert.conditions.push_back({"epsilon_below_one_eighth", cert.epsilon, 0.125, eps_ok});

  if (!(suru && kas && deltas && room && eps_ok)) {
    cert.verdict = "conditions_fail";
    for (const auto& c : cert.conditions)
      if (!c.holds) cert.reasons.push_back(c.name + " fails");
    return cert;
  }

  const double gap = cert.log_girth_bound - cert.log_color_bound;
  const double scale = std::min(std::abs(cert.log_girth_bound), std::abs(cert.log_color_bound));
  if (std::abs(gap) <= margin * scale) {
    cert.verdict = "indeterminate";
    cert.reasons.push_back("log bounds within the comparison margin");
  } else if (gap > 0) {
    cert.verdict = "holds";
  } else {
    // Under the leading-term policy a lost comparison is not a refutation:
    // the coloring bound omits a term with unspecified constant.
    cert.verdict = "indeterminate";
    cert.reasons.push_back("coloring bound dominates at this size under the leading-term policy");
  }
  return cert;
}

} // namespace matchbounds
