#include "matchbounds/family.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace matchbounds {

EventFamily::EventFamily(MatchingSpace space, std::vector<Matching> members)
    : space_(std::move(space)), members_(std::move(members)), stats_cell_(std::make_shared<StatsCell>()) {
  std::set<Matching> seen;
  for (const auto& m : members_) {
    space_.validate(m);
    require(seen.insert(m).second, errc::duplicate_member, "duplicate member in family");
  }
}

Rational event_probability(const MatchingSpace& space, const Matching& m) {
  space.validate(m);
  return extension_probability(space, static_cast<int>(m.size()));
}

Rational extension_probability(const MatchingSpace& space, int size) {
  auto p = extension_probability_shrunk(space, 0, size);
  if (!p) {
    if (space.kind() == SpaceKind::complete)
      fail(errc::size_too_large, "matching of size " + std::to_string(size) + " does not fit in K_" + std::to_string(space.n()));
    fail(errc::size_too_large, "matching of size " + std::to_string(size) + " exceeds the bipartite side");
  }
  return *p;
}

std::optional<Rational> extension_probability_shrunk(const MatchingSpace& space, int steps, int size) {
  require(size >= 0 && steps >= 0, errc::bad_params, "negative size or shrink step");
  Rational p = 1;
  switch (space.kind()) {
    case SpaceKind::complete: {
      long n = space.n() - 2L * steps;
      if (n < 2L * size) return std::nullopt;
      for (long t = 1; t <= size; ++t) p /= (n - 2 * t + 1);
      return p;
    }
    case SpaceKind::bipartite: {
      long n = space.n() - steps;
      if (n < size || space.m() < size) return std::nullopt;
      for (long t = 0; t < size; ++t) p /= (n - t);
      return p;
    }
    case SpaceKind::general:
      fail(errc::unsupported_space, "event probabilities in general graphs are served by the exact oracle");
  }
  return std::nullopt;
}

std::vector<std::vector<int>> conflict_graph(const EventFamily& family) {
  const auto& ms = family.members();
  const int n = static_cast<int>(ms.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (in_conflict(ms[i], ms[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  return adj;
}

namespace {

FamilyStats compute_stats(const EventFamily& family) {
  require(!family.empty(), errc::empty_family, "family_stats needs a nonempty family");
  const auto& space = family.space();
  FamilyStats s;

  std::set<int> size_set;
  for (const auto& m : family.members()) {
    int i = static_cast<int>(m.size());
    size_set.insert(i);
    s.count[i] += 1;
  }
  s.sizes.assign(size_set.begin(), size_set.end());
  s.r = s.sizes.empty() ? 0 : s.sizes.back();

  // incidence[size][vertex index] = number of size-`size` members covering it
  const int vcount = space.vertex_count();
  std::map<int, std::vector<long long>> incidence;
  for (int i : s.sizes) incidence[i].assign(vcount, 0);
  for (const auto& m : family.members()) {
    auto& inc = incidence[static_cast<int>(m.size())];
    for (const auto& [a, b] : m.edges()) {
      inc[space.vertex_index(a)] += 1;
      inc[space.vertex_index(b)] += 1;
    }
  }

  s.regular = true;
  for (int i : s.sizes) {
    const auto& inc = incidence[i];
    long long mx = *std::max_element(inc.begin(), inc.end());
    long long mn = *std::min_element(inc.begin(), inc.end());
    s.d[i] = mx;
    if (mx != mn) s.regular = false;
  }
  // Regular families in K_N satisfy d_i * N = 2i * |family_i|; this is a
  // consequence of counting vertex-member incidences two ways.
  if (s.regular && space.kind() == SpaceKind::complete) {
    for (int i : s.sizes)
      require(s.d[i] * space.n() == 2LL * i * s.count[i], errc::bad_params,
              "regular-family degree identity violated (internal inconsistency)");
  }

  s.mu = 0;
  for (int i : s.sizes) s.mu += Rational(s.count[i]) * extension_probability(space, i);
  return s;
}

} // namespace

const FamilyStats& EventFamily::stats() const {
  std::call_once(stats_cell_->once, [this] { stats_cell_->value = compute_stats(*this); });
  return *stats_cell_->value;
}

const FamilyStats& family_stats(const EventFamily& family) { return family.stats(); }

} // namespace matchbounds
