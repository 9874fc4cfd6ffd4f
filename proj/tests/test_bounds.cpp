#include "doctest.h"

#include <cmath>

#include "matchbounds/bounds.hpp"
#include "matchbounds/oracle.hpp"
#include "matchbounds/perm_latin.hpp"
#include "matchbounds/rng.hpp"

using namespace matchbounds;

namespace {

Matching m(std::vector<Edge> edges) { return canonical_form(std::move(edges)); }

EventFamily singleton_k(int n) { return EventFamily(MatchingSpace::complete(n), {m({{1, 2}})}); }

/// Family of `count` pairwise disjoint single edges {1,2},{3,4},... in K_n.
EventFamily disjoint_edges(int n, int count) {
  std::vector<Matching> members;
  for (int i = 0; i < count; ++i) members.push_back(m({{2 * i + 1, 2 * i + 2}}));
  return EventFamily(MatchingSpace::complete(n), std::move(members));
}

} // namespace

TEST_CASE("generic LLL evaluation") {
  auto ok = lll_lower_bound({Rational(1, 9)}, {{}}, {1.0 / 6.0});
  REQUIRE(ok.bound.has_value());
  CHECK(*ok.bound == doctest::Approx(5.0 / 6.0).epsilon(1e-12));

  auto trivial = lll_lower_bound({Rational(0), Rational(0)}, {{1}, {0}}, {0.0, 0.0});
  REQUIRE(trivial.bound.has_value());
  CHECK(*trivial.bound == 1.0);

  auto infeasible = lll_lower_bound({Rational(1, 2), Rational(1, 2)}, {{1}, {0}}, {0.6, 0.6});
  CHECK_FALSE(infeasible.bound.has_value());
  CHECK(*infeasible.violated_index == 0);

  CHECK_THROWS_AS(lll_lower_bound({Rational(1, 2)}, {{}, {}}, {0.1}), error);
}

TEST_CASE("simple lower bound on a K100 singleton") {
  auto report = simple_lower_bound(singleton_k(100), 0.02);
  REQUIRE(report.lower.has_value());
  CHECK(*report.lower == doctest::Approx(std::exp(-1.06 / 99.0)).epsilon(1e-12));
  // exact avoid probability is 98/99, above the bound
  CHECK(*report.lower <= 98.0 / 99.0);
}

TEST_CASE("simple lower bound inapplicable when a probability reaches eps") {
  auto report = simple_lower_bound(singleton_k(10), 0.05); // Pr = 1/9 > 0.05
  CHECK_FALSE(report.lower.has_value());
  bool flagged = false;
  for (const auto& f : report.validity)
    if (f.name == "event_probability_below_eps") flagged = !f.holds;
  CHECK(flagged);
}

TEST_CASE("simple lower bound of the empty family is one") {
  EventFamily family(MatchingSpace::complete(10), {});
  auto report = simple_lower_bound(family, 0.1);
  REQUIRE(report.lower.has_value());
  CHECK(*report.lower == 1.0);
}

TEST_CASE("epsilon domain is the open interval (0, 0.14)") {
  CHECK_THROWS_AS(simple_lower_bound(singleton_k(100), 0.0), error);
  CHECK_THROWS_AS(simple_lower_bound(singleton_k(100), 0.15), error);
  CHECK_THROWS_AS(simple_lower_bound(singleton_k(100), -0.1), error);
}

TEST_CASE("family lower bound on a K10 singleton") {
  auto report = family_lower_bound(singleton_k(10));
  REQUIRE(report.lower.has_value());
  CHECK(*report.lower == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(rational_from_double(*report.lower) <= Rational(5, 6));
  CHECK(*report.lower <= 8.0 / 9.0); // exact avoid probability
}

TEST_CASE("family lower bound inapplicable on a K4 singleton") {
  auto report = family_lower_bound(singleton_k(4));
  CHECK_FALSE(report.lower.has_value());
}

TEST_CASE("family lower bound of the empty family is one") {
  EventFamily family(MatchingSpace::complete(8), {});
  CHECK(*family_lower_bound(family).lower == 1.0);
}

TEST_CASE("zero discriminant reduces to the product of (1 - 2p)") {
  // K_{8,8} singleton: 8 r d p = 8/8 = 1 exactly
  EventFamily family(MatchingSpace::bipartite(8, 8), {m({{1, -1}})});
  auto report = family_lower_bound(family);
  REQUIRE(report.lower.has_value());
  CHECK(*report.lower == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(exact_avoid_probability(family) == Rational(7, 8));
}

TEST_CASE("sparseness of a K100 singleton at the automatic delta") {
  auto rep = delta_sparseness(singleton_k(100));
  CHECK(rep.holds());
  CHECK(rep.delta_min_cond3 == Rational(0));
  CHECK(rep.chosen_delta == 0.0);
  CHECK(rep.cond2_lhs == Rational(1, 99));
}

TEST_CASE("a subset pair violates condition 1") {
  EventFamily family(MatchingSpace::complete(10), {m({{1, 2}}), m({{1, 2}, {3, 4}})});
  auto rep = delta_sparseness(family);
  CHECK_FALSE(rep.cond1_no_subset_pair);
  CHECK_FALSE(rep.holds());
}

TEST_CASE("2-cycle families: overlap sums vanish, the degree condition needs n >= 19") {
  // members sharing an edge with a 2-cycle can only be the 2-cycle itself,
  // so condition 3 is free; condition 2 reads d_2 p' = (n-1)/((n-1)(n-2))
  // < 1/16, first true at n = 19
  auto at9 = delta_sparseness(k_cycle_event_family(9, 2));
  CHECK(at9.delta_min_cond3 == Rational(0));
  CHECK(at9.cond1_no_subset_pair);
  CHECK_FALSE(at9.cond2_degree_sum);
  CHECK_FALSE(at9.holds());

  auto at19 = delta_sparseness(k_cycle_event_family(19, 2));
  CHECK(at19.delta_min_cond3 == Rational(0));
  CHECK(at19.cond2_lhs == Rational(1, 17));
  CHECK(at19.holds());
}

TEST_CASE("near-positive epsilon of a K100 singleton") {
  auto eps = near_positive_epsilon(singleton_k(100), 0.0);
  REQUIRE(eps.has_value());
  CHECK(*eps == doctest::Approx(1.0 - (1.0 + std::sqrt(1.0 - 8.0 / 99.0)) / 2.0).epsilon(1e-12));
  CHECK(*eps == doctest::Approx(0.02063).epsilon(1e-3));
}

TEST_CASE("near-positive epsilon vanishes in the large-N limit") {
  auto eps = near_positive_epsilon(singleton_k(1000000), 0.0);
  REQUIRE(eps.has_value());
  CHECK(*eps < 1e-5);
  CHECK(*eps > 0.0);
}

TEST_CASE("near-positive epsilon for a single-row Latin family") {
  std::vector<Matching> members;
  for (int j = 1; j <= 100; ++j) members.push_back(m({{j, -j}}));
  EventFamily family(MatchingSpace::bipartite(100, 100), std::move(members));
  auto eps = near_positive_epsilon(family, 0.0);
  REQUIRE(eps.has_value());
  CHECK(*eps == doctest::Approx(0.5 * (1.0 - std::sqrt(1.0 - 8.0 / 100.0))).epsilon(1e-12));
  CHECK(*eps <= 4.0 * 1.0 / 100.0);
}

TEST_CASE("upper bound on a K100 singleton") {
  auto report = family_upper_bound(singleton_k(100), 0.0);
  REQUIRE(report.upper.has_value());
  CHECK(*report.upper == doctest::Approx(0.990107).epsilon(1e-5));
  CHECK(*report.upper >= 98.0 / 99.0);
}

TEST_CASE("upper bound of the empty family is one") {
  EventFamily family(MatchingSpace::complete(8), {});
  CHECK(*family_upper_bound(family, 0.0).upper == 1.0);
}

TEST_CASE("condition 4 rejects delta = 1/2") {
  auto report = family_upper_bound(singleton_k(100), 0.5);
  CHECK_FALSE(report.upper.has_value());
  bool cond4 = true;
  for (const auto& f : report.validity)
    if (f.name == "cond4_16r_delta") cond4 = f.holds;
  CHECK_FALSE(cond4);
}

TEST_CASE("sandwich on singletons across even N") {
  for (int n = 10; n <= 16; n += 2) {
    auto family = singleton_k(n);
    auto lower = family_lower_bound(family);
    auto sparse = delta_sparseness(family);
    auto upper = family_upper_bound(family, sparse.chosen_delta);
    auto exact = exact_avoid_probability(family);
    REQUIRE(lower.lower.has_value());
    REQUIRE(upper.upper.has_value());
    CHECK(rational_from_double(*lower.lower) <= exact);
    CHECK(rational_from_double(*upper.upper) >= exact);
  }
}

TEST_CASE("sandwich on disjoint-edge families") {
  for (int count = 1; count <= 3; ++count) {
    auto family = disjoint_edges(14, count);
    auto lower = family_lower_bound(family);
    auto sparse = delta_sparseness(family);
    auto upper = family_upper_bound(family, sparse.chosen_delta);
    auto exact = exact_avoid_probability(family);
    REQUIRE(lower.lower.has_value());
    REQUIRE(upper.upper.has_value());
    CHECK(rational_from_double(*lower.lower) <= exact);
    CHECK(rational_from_double(*upper.upper) >= exact);
  }
}

TEST_CASE("asymptotic bracket of a regular family") {
  auto family = k_cycle_event_family(9, 2);
  auto report = asymptotic_bracket(family);
  REQUIRE(report.asymptotic.has_value());
  CHECK(*report.asymptotic == doctest::Approx(std::exp(-0.5)).epsilon(1e-9));
  bool found_ratio = false;
  for (const auto& f : report.validity) found_ratio |= (f.name == "mu_r32_over_sqrt_n_ratio");
  CHECK(found_ratio);
}

TEST_CASE("asymptotic bracket rejects irregular families") {
  CHECK_THROWS_AS(asymptotic_bracket(singleton_k(10)), error);
}

TEST_CASE("asymptotic bracket of the empty family") {
  EventFamily family(MatchingSpace::complete(8), {});
  auto report = asymptotic_bracket(family);
  CHECK(*report.lower == 1.0);
  CHECK(*report.upper == 1.0);
  CHECK(*report.asymptotic == 1.0);
}

TEST_CASE("quotient with singleton classes reproduces the conflict graph") {
  SplitMix64 rng(17);
  EventFamily family(MatchingSpace::complete(8),
                     {m({{1, 2}}), m({{1, 3}}), m({{4, 5}}), m({{2, 4}, {5, 6}})});
  std::vector<std::vector<int>> singletons{{0}, {1}, {2}, {3}};
  auto quotient = quotient_events(family, singletons);
  CHECK(quotient.adjacency == conflict_graph(family));
  for (std::size_t i = 0; i < family.size(); ++i)
    CHECK(quotient.class_probability[i] == event_probability(family.space(), family.members()[i]));
}

TEST_CASE("two conflicting singleton classes give one quotient edge") {
  EventFamily family(MatchingSpace::complete(6), {m({{1, 2}}), m({{1, 3}})});
  auto quotient = quotient_events(family, {{0}, {1}});
  CHECK(quotient.adjacency[0] == std::vector<int>{1});
}

TEST_CASE("classes must be pairwise conflicting") {
  EventFamily family(MatchingSpace::complete(6), {m({{1, 2}}), m({{3, 4}})});
  try {
    quotient_events(family, {{0, 1}});
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::class_not_exclusive);
  }
}

TEST_CASE("partitions must cover each member exactly once") {
  EventFamily family(MatchingSpace::complete(6), {m({{1, 2}}), m({{1, 3}})});
  CHECK_THROWS_AS(quotient_events(family, {{0}}), error);
  CHECK_THROWS_AS(quotient_events(family, {{0, 0}, {1}}), error);
  CHECK_THROWS_AS(quotient_events(family, {{0}, {1, 2}}), error);
}

TEST_CASE("degree overrides weaken but never invalidate the bounds") {
  auto family = singleton_k(20);
  auto tight = family_lower_bound(family);
  auto loose = family_lower_bound(family, {{1, 2}});
  REQUIRE(tight.lower.has_value());
  REQUIRE(loose.lower.has_value());
  CHECK(*loose.lower <= *tight.lower);
  CHECK(rational_from_double(*loose.lower) <= Rational(18, 19)); // exact avoid probability

  auto eps_tight = near_positive_epsilon(family, 0.0);
  auto eps_loose = near_positive_epsilon(family, 0.0, {{1, 2}});
  REQUIRE(eps_loose.has_value());
  CHECK(*eps_loose >= *eps_tight);

  CHECK_THROWS_AS(family_lower_bound(family, {{1, 0}}), error);
}

TEST_CASE("cycle families: both bounds bracket the exact ratio once applicable") {
  // the cycle-free ratio D-like exact value comes from inclusion-exclusion,
  // so the sandwich is checked against ground truth well beyond oracle range
  double prev_width = 1.0;
  for (auto [n, k] : {std::pair{9, 1}, {12, 1}, {15, 1}, {19, 2}, {25, 2}, {33, 2}}) {
    auto family = k_cycle_event_family(n, k);
    auto lower = family_lower_bound(family);
    auto sparse = delta_sparseness(family);
    auto upper = family_upper_bound(family, sparse.chosen_delta);
    REQUIRE(lower.lower.has_value());
    REQUIRE(upper.upper.has_value());
    const Rational exact = Rational(k_cycle_free_count_ie(n, k)) / Rational(factorial(n));
    CHECK(rational_from_double(*lower.lower) <= exact);
    CHECK(rational_from_double(*upper.upper) >= exact);
    const double width = *upper.upper - *lower.lower;
    if (k == 1) {
      CHECK(width < prev_width); // the bracket tightens with n
      prev_width = width;
    }
  }
}

TEST_CASE("the simple bound's weights satisfy the generic LLL hypothesis") {
  // x_i = (1+3 eps) p_i (1 - p_i) is the choice that proves the simple
  // bound; feeding it to the generic evaluator must come back feasible with
  // a product at least as large as exp(-(1+3 eps) mu)
  EventFamily family(MatchingSpace::complete(100),
                     {m({{1, 2}}), m({{1, 3}}), m({{4, 5}}), m({{6, 7}, {8, 9}})});
  const double eps = 0.05;
  auto simple = simple_lower_bound(family, eps);
  REQUIRE(simple.lower.has_value());

  std::vector<Rational> p;
  std::vector<double> x;
  for (const auto& member : family.members()) {
    p.push_back(event_probability(family.space(), member));
    const double pd = to_double_up(p.back());
    x.push_back((1.0 + 3.0 * eps) * pd * (1.0 - pd));
  }
  auto generic = lll_lower_bound(p, conflict_graph(family), x);
  REQUIRE(generic.bound.has_value());
  CHECK(*generic.bound >= *simple.lower);
}
