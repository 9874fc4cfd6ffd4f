#include "doctest.h"

#include "matchbounds/bounds.hpp"
#include "matchbounds/oracle.hpp"
#include "matchbounds/rng.hpp"

using namespace matchbounds;

namespace {

Matching m(std::vector<Edge> edges) { return canonical_form(std::move(edges)); }

MatchingSpace c6() {
  return MatchingSpace::general(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
}

EventFamily random_family(SplitMix64& rng, const MatchingSpace& space, int max_members, int max_size) {
  std::vector<Matching> members;
  const int want = 1 + static_cast<int>(rng.below(max_members));
  int guard = 0;
  while (static_cast<int>(members.size()) < want && ++guard < 200) {
    std::vector<Edge> edges;
    const int size = 1 + static_cast<int>(rng.below(max_size));
    std::vector<int> left, right;
    if (space.kind() == SpaceKind::bipartite) {
      for (int i = 1; i <= space.n(); ++i) left.push_back(i);
      for (int i = 1; i <= space.m(); ++i) right.push_back(-i);
    } else {
      for (int i = 1; i <= space.n(); ++i) left.push_back(i);
      right = left;
    }
    for (int i = static_cast<int>(left.size()) - 1; i > 0; --i) std::swap(left[i], left[rng.below(i + 1)]);
    for (int i = static_cast<int>(right.size()) - 1; i > 0; --i) std::swap(right[i], right[rng.below(i + 1)]);
    if (space.kind() == SpaceKind::bipartite) {
      for (int t = 0; t < size && t < space.m(); ++t) edges.push_back(make_edge(left[t], right[t]));
    } else {
      for (int t = 0; 2 * t + 1 < static_cast<int>(left.size()) && t < size; ++t)
        edges.push_back(make_edge(left[2 * t], left[2 * t + 1]));
    }
    auto cand = canonical_form(std::move(edges));
    bool dup = false;
    for (const auto& existing : members) dup |= (existing == cand);
    if (!dup) members.push_back(cand);
  }
  return EventFamily(space, std::move(members));
}

} // namespace

TEST_CASE("perfect matching counts match the closed forms") {
  CHECK(perfect_matching_count(MatchingSpace::complete(4)) == 3);
  CHECK(perfect_matching_count(MatchingSpace::complete(6)) == 15);
  CHECK(perfect_matching_count(c6()) == 2);
  for (int n = 2; n <= 10; n += 2)
    CHECK(Int(all_perfect_matchings(MatchingSpace::complete(n)).size()) ==
          perfect_matching_count(MatchingSpace::complete(n)));
  for (int n = 2; n <= 5; ++n)
    for (int mm = 1; mm <= n; ++mm)
      CHECK(Int(all_perfect_matchings(MatchingSpace::bipartite(n, mm)).size()) ==
            falling_factorial(n, mm));
}

TEST_CASE("enumeration is duplicate-free and deterministic") {
  auto first = all_perfect_matchings(MatchingSpace::complete(8));
  auto second = all_perfect_matchings(MatchingSpace::complete(8));
  CHECK(first == second);
  auto copy = first;
  std::sort(copy.begin(), copy.end());
  CHECK(std::adjacent_find(copy.begin(), copy.end()) == copy.end());
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(all_perfect_matchings(MatchingSpace::complete(18)), error);
  OracleLimits tight;
  tight.complete_max = 6;
  CHECK_THROWS_AS(all_perfect_matchings(MatchingSpace::complete(8), tight), error);
}

TEST_CASE("avoid probability on hand-checked cases") {
  CHECK(exact_avoid_probability(EventFamily(MatchingSpace::complete(4), {m({{1, 2}})})) == Rational(2, 3));
  CHECK(exact_avoid_probability(EventFamily(MatchingSpace::complete(4), {})) == Rational(1));
}

TEST_CASE("avoid probability of all 2-cycles in the 4-permutation space") {
  // permutations of [4] without a 2-cycle: cycle types 1^4, 3+1, 4 give
  // 1 + 8 + 6 = 15 of 24
  std::vector<Matching> members;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) members.push_back(m({{a, -b}, {b, -a}}));
  EventFamily family(MatchingSpace::bipartite(4, 4), members);
  CHECK(exact_avoid_probability(family) == Rational(15, 24));
}

TEST_CASE("general space with no perfect matching errors lazily") {
  auto path3 = MatchingSpace::general(3, {{1, 2}, {2, 3}});
  try {
    exact_avoid_probability(EventFamily(path3, {m({{1, 2}})}));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::no_perfect_matching);
  }
}

TEST_CASE("negative dependency holds for canonical families in K6") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    auto family = random_family(rng, MatchingSpace::complete(6), 6, 3);
    auto report = check_negative_dependency(family);
    CHECK(report.passed);
    CHECK_FALSE(report.truncated);
  }
}

TEST_CASE("singleton family passes vacuously") {
  auto report = check_negative_dependency(EventFamily(MatchingSpace::complete(6), {m({{1, 2}})}));
  CHECK(report.passed);
  CHECK(report.checked_pairs == 1); // S = {} only
}

TEST_CASE("C6 opposite edges violate negative dependency") {
  EventFamily family(c6(), {m({{1, 2}}), m({{4, 5}})});
  auto report = check_negative_dependency(family);
  CHECK_FALSE(report.passed);
  REQUIRE(report.violations.size() == 2); // both orientations
  for (const auto& v : report.violations) {
    CHECK(v.lhs == Rational(1));
    CHECK(v.rhs == Rational(1, 2));
    CHECK(v.subset.size() == 1);
  }
}

TEST_CASE("near-positive check at the computed epsilon for a K10 singleton") {
  EventFamily family(MatchingSpace::complete(10), {m({{1, 2}})});
  auto eps = near_positive_epsilon(family, 0.0);
  REQUIRE(eps.has_value());
  auto report = check_near_positive(family, *eps);
  CHECK(report.passed);
}

TEST_CASE("near-positive check passes trivially at epsilon = 1") {
  SplitMix64 rng(5);
  auto family = random_family(rng, MatchingSpace::complete(6), 5, 2);
  CHECK(check_near_positive(family, 1.0).passed);
}

TEST_CASE("epsilon = 0 exposes genuine negative dependence") {
  EventFamily family(MatchingSpace::complete(4), {m({{1, 2}}), m({{3, 4}})});
  auto report = check_near_positive(family, 0.0);
  CHECK_FALSE(report.passed);
}

TEST_CASE("re-embedding into K_{N+2} never decreases the avoid probability") {
  SplitMix64 rng(99);
  for (int n : {4, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto family = random_family(rng, MatchingSpace::complete(n), 5, 2);
      EventFamily bigger(MatchingSpace::complete(n + 2), family.members());
      CHECK(exact_avoid_probability(bigger) >= exact_avoid_probability(family));
    }
  }
}

TEST_CASE("re-embedding ratio bound from the degree sums holds exactly") {
  SplitMix64 rng(123);
  int applicable = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto family = random_family(rng, MatchingSpace::complete(10), 4, 2);
    auto ratio = reembedding_ratio_bound(family);
    if (!ratio) continue;
    ++applicable;
    EventFamily bigger(MatchingSpace::complete(12), family.members());
    // Pr(avoid in K_{N+2}) <= ratio * Pr(avoid in K_N)
    CHECK(exact_avoid_probability(bigger) <= rational_from_double(*ratio) * exact_avoid_probability(family));
  }
  CHECK(applicable > 5);
}
