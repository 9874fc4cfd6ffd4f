#include "matchbounds/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace matchbounds {

namespace {

void check_feasible(const MatchingSpace& space, const OracleLimits& limits) {
  switch (space.kind()) {
    case SpaceKind::complete:
      require(space.n() <= limits.complete_max, errc::too_large,
              "K_" + std::to_string(space.n()) + " exceeds the enumeration cap");
      return;
    case SpaceKind::bipartite:
      require(space.n() <= limits.bipartite_max, errc::too_large,
              "K_{N,M} with N=" + std::to_string(space.n()) + " exceeds the enumeration cap");
      return;
    case SpaceKind::general:
      require(space.vertex_count() <= limits.general_max, errc::too_large,
              "general graph exceeds the enumeration cap");
      return;
  }
}

void recurse_complete(int n, std::vector<int>& partner, int covered,
                      const std::function<void(const std::vector<int>&)>& cb) {
  if (covered == n) {
    cb(partner);
    return;
  }
  int v = 0;
  while (partner[v] >= 0) ++v;
  for (int u = v + 1; u < n; ++u) {
    if (partner[u] >= 0) continue;
    partner[v] = u;
    partner[u] = v;
    recurse_complete(n, partner, covered + 2, cb);
    partner[v] = -1;
    partner[u] = -1;
  }
}

// Right vertices (indices n..n+m-1) each choose a distinct left partner.
void recurse_bipartite(int n, int m, int right, std::vector<int>& partner,
                       const std::function<void(const std::vector<int>&)>& cb) {
  if (right == m) {
    cb(partner);
    return;
  }
  for (int u = 0; u < n; ++u) {
    if (partner[u] >= 0) continue;
    partner[u] = n + right;
    partner[n + right] = u;
    recurse_bipartite(n, m, right + 1, partner, cb);
    partner[u] = -1;
    partner[n + right] = -1;
  }
}

void recurse_general(const std::vector<std::vector<int>>& adj, std::vector<int>& partner, int covered,
                     const std::function<void(const std::vector<int>&)>& cb) {
  const int n = static_cast<int>(adj.size());
  if (covered == n) {
    cb(partner);
    return;
  }
  int v = 0;
  while (partner[v] >= 0) ++v;
  for (int u : adj[v]) {
    if (u <= v || partner[u] >= 0) continue;
    partner[v] = u;
    partner[u] = v;
    recurse_general(adj, partner, covered + 2, cb);
    partner[v] = -1;
    partner[u] = -1;
  }
}

} // namespace

void for_each_perfect_matching(const MatchingSpace& space,
                               const std::function<void(const std::vector<int>&)>& cb,
                               const OracleLimits& limits) {
  check_feasible(space, limits);
  std::vector<int> partner(space.vertex_count(), -1);
  switch (space.kind()) {
    case SpaceKind::complete:
      require(space.n() % 2 == 0, errc::bad_params, "odd complete graph has no perfect matching");
      recurse_complete(space.n(), partner, 0, cb);
      return;
    case SpaceKind::bipartite:
      recurse_bipartite(space.n(), space.m(), 0, partner, cb);
      return;
    case SpaceKind::general: {
      std::vector<std::vector<int>> adj(space.vertex_count());
      for (const auto& [a, b] : space.graph_edges()) {
        adj[space.vertex_index(a)].push_back(space.vertex_index(b));
        adj[space.vertex_index(b)].push_back(space.vertex_index(a));
      }
      for (auto& nb : adj) std::sort(nb.begin(), nb.end());
      if (space.vertex_count() % 2 != 0) return; // no perfect matching
      recurse_general(adj, partner, 0, cb);
      return;
    }
  }
}

Int perfect_matching_count(const MatchingSpace& space, const OracleLimits& limits) {
  switch (space.kind()) {
    case SpaceKind::complete:
      return double_factorial(space.n() - 1);
    case SpaceKind::bipartite:
      return falling_factorial(space.n(), space.m());
    case SpaceKind::general: {
      Int count = 0;
      for_each_perfect_matching(space, [&](const std::vector<int>&) { ++count; }, limits);
      return count;
    }
  }
  return 0;
}

std::vector<Matching> all_perfect_matchings(const MatchingSpace& space, const OracleLimits& limits) {
  std::vector<Matching> out;
  for_each_perfect_matching(space, [&](const std::vector<int>& partner) {
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(partner.size()); ++i)
      if (partner[i] > i) edges.push_back(make_edge(space.vertex_label(i), space.vertex_label(partner[i])));
    out.push_back(canonical_form(std::move(edges)));
  }, limits);
  return out;
}

namespace {

/// Per-perfect-matching bitmask of which family members it contains.
struct MemberMasks {
  int words = 0;
  std::vector<std::uint64_t> masks; // flattened, `words` per matching
  long long total = 0;
};

MemberMasks member_masks(const EventFamily& family, const OracleLimits& limits) {
  const auto& space = family.space();
  const int m = static_cast<int>(family.size());
  MemberMasks mm;
  mm.words = (m + 63) / 64;

  // members as (index of a, index of b) lists for O(r) containment tests
  std::vector<std::vector<std::pair<int, int>>> medges(m);
  for (int k = 0; k < m; ++k)
    for (const auto& [a, b] : family.members()[k].edges())
      medges[k].push_back({space.vertex_index(a), space.vertex_index(b)});

  for_each_perfect_matching(space, [&](const std::vector<int>& partner) {
    std::vector<std::uint64_t> w(mm.words, 0);
    for (int k = 0; k < m; ++k) {
      bool inside = true;
      for (const auto& [ia, ib] : medges[k])
        if (partner[ia] != ib) {
          inside = false;
          break;
        }
      if (inside) w[k / 64] |= (std::uint64_t{1} << (k % 64));
    }
    mm.masks.insert(mm.masks.end(), w.begin(), w.end());
    mm.total += 1;
  }, limits);
  require(mm.total > 0, errc::no_perfect_matching, "space has no perfect matching");
  return mm;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, int words) {
  for (int i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

} // namespace

Rational exact_avoid_probability(const EventFamily& family, const OracleLimits& limits) {
  const auto mm = member_masks(family, limits);
  long long good = 0;
  const int w = mm.words;
  for (long long t = 0; t < mm.total; ++t) {
    bool hit = false;
    for (int i = 0; i < w; ++i)
      if (mm.masks[t * w + i]) {
        hit = true;
        break;
      }
    if (!hit) ++good;
  }
  return Rational(good) / Rational(mm.total);
}

namespace {

// Shared driver for both exhaustive checks. `near_positive` switches the
// direction of the inequality and the (1-eps) factor.
DependencyCheckReport run_exhaustive_check(const EventFamily& family, bool near_positive, double epsilon,
                                           int max_subset, const OracleLimits& limits) {
  require(max_subset >= 0 && max_subset <= 30, errc::bad_params, "max_subset must lie in [0, 30]");
  DependencyCheckReport report;
  if (family.empty()) {
    report.passed = true;
    return report;
  }

  const auto mm = member_masks(family, limits);
  const auto adj = conflict_graph(family);
  const int m = static_cast<int>(family.size());
  const int words = mm.words;

  std::vector<long long> member_count(m, 0);
  for (long long t = 0; t < mm.total; ++t)
    for (int k = 0; k < m; ++k)
      if (mm.masks[t * words + k / 64] & (std::uint64_t{1} << (k % 64))) ++member_count[k];

  const Rational one_minus_eps = near_positive ? Rational(1) - rational_from_double(epsilon) : Rational(0);

  // Exclusivity of conflicting members (first part of the near-positive
  // definition). Canonical events satisfy it structurally, but the check is
  // the point of this oracle.
  if (near_positive) {
    for (int i = 0; i < m; ++i)
      for (int j : adj[i]) {
        if (j <= i) continue;
        long long both = 0;
        for (long long t = 0; t < mm.total; ++t) {
          const std::uint64_t* row = &mm.masks[t * words];
          bool bi = row[i / 64] & (std::uint64_t{1} << (i % 64));
          bool bj = row[j / 64] & (std::uint64_t{1} << (j % 64));
          if (bi && bj) ++both;
        }
        if (both > 0)
          report.violations.push_back({i, {j}, Rational(both) / mm.total, Rational(0)});
      }
  }

  for (int i = 0; i < m; ++i) {
    std::vector<int> nonneighbors;
    for (int j = 0; j < m; ++j)
      if (j != i && !std::binary_search(adj[i].begin(), adj[i].end(), j)) nonneighbors.push_back(j);
    if (static_cast<int>(nonneighbors.size()) > max_subset) {
      report.truncated = true;
      nonneighbors.resize(max_subset);
    }
    const int k = static_cast<int>(nonneighbors.size());

    std::vector<std::uint64_t> smask(words);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
      std::fill(smask.begin(), smask.end(), 0);
      for (int b = 0; b < k; ++b)
        if (sub & (std::uint64_t{1} << b)) {
          int j = nonneighbors[b];
          smask[j / 64] |= (std::uint64_t{1} << (j % 64));
        }

      long long cnt_s = 0, cnt_is = 0;
      for (long long t = 0; t < mm.total; ++t) {
        const std::uint64_t* row = &mm.masks[t * words];
        if (intersects(row, smask.data(), words)) continue;
        ++cnt_s;
        if (row[i / 64] & (std::uint64_t{1} << (i % 64))) ++cnt_is;
      }
      if (cnt_s == 0) continue; // conditional not well-defined
      ++report.checked_pairs;

      // Pr(A_i | avoid S) vs Pr(A_i): compare cnt_is * total against
      // member_count[i] * cnt_s, exactly.
      const Int lhs_num = Int(cnt_is) * mm.total;
      bool violated;
      Rational rhs;
      if (!near_positive) {
        violated = lhs_num > Int(member_count[i]) * cnt_s;
        rhs = Rational(member_count[i]) / mm.total;
      } else {
        const Rational lhs = Rational(cnt_is) / cnt_s;
        rhs = one_minus_eps * Rational(member_count[i]) / mm.total;
        violated = lhs < rhs;
      }
      if (violated) {
        DependencyViolation v;
        v.member = i;
        for (int b = 0; b < k; ++b)
          if (sub & (std::uint64_t{1} << b)) v.subset.push_back(nonneighbors[b]);
        v.lhs = Rational(cnt_is) / cnt_s;
        v.rhs = rhs;
        report.violations.push_back(std::move(v));
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

} // namespace

DependencyCheckReport check_negative_dependency(const EventFamily& family, int max_subset,
                                                const OracleLimits& limits) {
  return run_exhaustive_check(family, false, 0.0, max_subset, limits);
}

DependencyCheckReport check_near_positive(const EventFamily& family, double epsilon, int max_subset,
                                          const OracleLimits& limits) {
  require(epsilon >= 0.0, errc::bad_epsilon, "epsilon must be nonnegative");
  return run_exhaustive_check(family, true, epsilon, max_subset, limits);
}

} // namespace matchbounds
