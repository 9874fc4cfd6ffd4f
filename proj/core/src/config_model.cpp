#include "matchbounds/config_model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <thread>

#include "matchbounds/rng.hpp"

namespace matchbounds {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  require(!degrees_.empty(), errc::bad_params, "degree sequence must be nonempty");
  offsets_.reserve(degrees_.size() + 1);
  offsets_.push_back(0);
  for (int d : degrees_) {
    require(d >= 1, errc::bad_params, "degrees must be positive");
    offsets_.push_back(offsets_.back() + d);
  }
  total_ = offsets_.back();
  require(total_ % 2 == 0, errc::odd_sum, "degree sum must be even");
}

DegreeSequence DegreeSequence::regular(int n, int d) {
  require(n >= 1 && d >= 1, errc::bad_params, "regular sequence needs n, d >= 1");
  return DegreeSequence(std::vector<int>(n, d));
}

int DegreeSequence::class_of(int mini) const {
  require(mini >= 0 && mini < total_, errc::bad_vertex, "mini-vertex out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), mini);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::pair<int, int> DegreeSequence::block(int c) const {
  require(c >= 0 && c < n(), errc::bad_vertex, "class out of range");
  return {offsets_[c], offsets_[c + 1]};
}

bool MultiGraph::has_loop() const {
  for (const auto& [e, mult] : edges)
    if (e.first == e.second && mult > 0) return true;
  return false;
}

bool MultiGraph::has_multi_edge() const {
  for (const auto& [e, mult] : edges)
    if (e.first != e.second && mult > 1) return true;
  return false;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const auto& [e, mult] : edges) {
    deg[e.first] += mult;
    deg[e.second] += mult; // loops count twice
  }
  return deg;
}

MultiGraph project(const std::vector<int>& partner, const DegreeSequence& dseq) {
  const int total = dseq.total();
  require(static_cast<int>(partner.size()) == total, errc::not_perfect, "partner array size mismatch");
  // class_of per mini, precomputed linearly
  std::vector<int> cls(total);
  for (int c = 0; c < dseq.n(); ++c) {
    auto [b, e] = dseq.block(c);
    for (int i = b; i < e; ++i) cls[i] = c;
  }
  std::map<std::pair<int, int>, int> mult;
  for (int v = 0; v < total; ++v) {
    int u = partner[v];
    require(u >= 0 && u < total && u != v && partner[u] == v, errc::not_perfect,
            "matching must be perfect on the mini-vertices");
    if (u < v) continue;
    int a = cls[v], b = cls[u];
    if (a > b) std::swap(a, b);
    mult[{a, b}] += 1;
  }
  MultiGraph g;
  g.n = dseq.n();
  g.edges.assign(mult.begin(), mult.end());
  return g;
}

MultiGraph project(const Matching& matching, const DegreeSequence& dseq) {
  const int total = dseq.total();
  require(static_cast<int>(matching.size()) * 2 == total, errc::not_perfect,
          "matching must cover all mini-vertices");
  std::vector<int> partner(total, -1);
  for (const auto& [a, b] : matching.edges()) {
    require(a >= 1 && b <= total, errc::not_perfect, "mini-vertex labels must lie in 1..N");
    partner[a - 1] = b - 1;
    partner[b - 1] = a - 1;
  }
  return project(partner, dseq);
}

namespace {

/// Uniform perfect matching of {0..N-1}: repeatedly pair the lowest
/// unmatched mini-vertex with a uniform choice among the others. Exactly
/// uniform, O(N) amortized.
void sample_matching(int total, SplitMix64& rng, std::vector<int>& partner) {
  partner.assign(total, -1);
  std::vector<int> avail(total);
  std::vector<int> pos(total);
  for (int i = 0; i < total; ++i) avail[i] = pos[i] = i;
  auto remove = [&](int v) {
    int last = avail.back();
    avail[pos[v]] = last;
    pos[last] = pos[v];
    avail.pop_back();
  };
  int lowest = 0;
  while (!avail.empty()) {
    while (partner[lowest] != -1) ++lowest;
    int u;
    do {
      u = avail[static_cast<std::size_t>(rng.below(avail.size()))];
    } while (u == lowest);
    partner[lowest] = u;
    partner[u] = lowest;
    remove(lowest);
    remove(u);
  }
}

} // namespace

Matching sample_perfect_matching(int total, std::uint64_t seed, std::uint64_t counter) {
  require(total >= 2 && total % 2 == 0, errc::odd_sum, "need an even number of mini-vertices");
  auto rng = stream_rng(seed, counter);
  std::vector<int> partner;
  sample_matching(total, rng, partner);
  std::vector<Edge> edges;
  for (int v = 0; v < total; ++v)
    if (partner[v] > v) edges.push_back(make_edge(v + 1, partner[v] + 1));
  return canonical_form(std::move(edges));
}

MultiGraph sample_multigraph(const DegreeSequence& dseq, std::uint64_t seed, std::uint64_t counter) {
  auto rng = stream_rng(seed, counter);
  std::vector<int> partner;
  sample_matching(dseq.total(), rng, partner);
  return project(partner, dseq);
}

namespace {

std::vector<std::vector<int>> simple_support(const MultiGraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [e, mult] : g.edges) {
    if (e.first == e.second || mult == 0) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  return adj;
}

/// Shortest cycle through the BFS root's component discovered from `root`,
/// or INT_MAX. Stops expanding past `depth_cap`.
int bfs_shortest_cycle(const std::vector<std::vector<int>>& adj, int root, int depth_cap) {
  std::vector<int> dist(adj.size(), -1), parent(adj.size(), -1);
  std::deque<int> queue{root};
  dist[root] = 0;
  int best = std::numeric_limits<int>::max();
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (dist[v] >= depth_cap) break;
    for (int u : adj[v]) {
      if (u == parent[v]) {
        parent[v] = -2; // a parallel edge would be a multi-edge, excluded here
        continue;
      }
      if (dist[u] == -1) {
        dist[u] = dist[v] + 1;
        parent[u] = v;
        queue.push_back(u);
      } else {
        best = std::min(best, dist[v] + dist[u] + 1);
      }
    }
  }
  return best;
}

} // namespace

std::optional<int> girth(const MultiGraph& g) {
  if (g.has_loop()) return 1;
  if (g.has_multi_edge()) return 2;
  const auto adj = simple_support(g);
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.n; ++v) best = std::min(best, bfs_shortest_cycle(adj, v, g.n + 1));
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool girth_at_least(const MultiGraph& g, int bound) {
  if (bound <= 1) return true;
  if (g.has_loop()) return false;
  if (bound == 2) return true;
  if (g.has_multi_edge()) return false;
  if (bound == 3) return true;
  const auto adj = simple_support(g);
  // A cycle of length L < bound is seen from any of its vertices within
  // depth floor(L/2) + 1.
  const int cap = bound / 2 + 1;
  for (int v = 0; v < g.n; ++v)
    if (bfs_shortest_cycle(adj, v, cap) < bound) return false;
  return true;
}

double girth_prediction(int d, int g) {
  require(d >= 3 && g >= 3, errc::bad_params, "girth prediction needs d >= 3, g >= 3");
  double sum = 0;
  double power = 1;
  for (int i = 1; i <= g - 1; ++i) {
    power *= (d - 1);
    sum += power / (2.0 * i);
  }
  return std::exp(-sum);
}

McEstimate mc_girth_at_least(const DegreeSequence& dseq, int g, long long trials, std::uint64_t seed,
                             int threads, std::vector<std::optional<int>>* record) {
  require(trials >= 1, errc::bad_params, "at least one trial required");
  require(g >= 1, errc::bad_params, "girth threshold must be positive");
  if (threads < 1) threads = 1;
  if (record) record->assign(static_cast<std::size_t>(trials), std::nullopt);

  std::vector<long long> hits(threads, 0);
  auto worker = [&](int w) {
    const long long lo = trials * w / threads;
    const long long hi = trials * (w + 1) / threads;
    std::vector<int> partner;
    for (long long t = lo; t < hi; ++t) {
      auto rng = stream_rng(seed, static_cast<std::uint64_t>(t));
      sample_matching(dseq.total(), rng, partner);
      MultiGraph graph = project(partner, dseq);
      bool ok;
      if (record) {
        auto value = girth(graph);
        (*record)[static_cast<std::size_t>(t)] = value;
        ok = !value || *value >= g; // acyclic counts as infinite girth
      } else {
        ok = girth_at_least(graph, g);
      }
      if (ok) ++hits[w];
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  long long total_hits = 0;
  for (long long h : hits) total_hits += h;

  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.estimate = static_cast<double>(total_hits) / static_cast<double>(trials);
  est.standard_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
  return est;
}

Rational exact_girth_probability(const DegreeSequence& dseq, int g, const OracleLimits& limits) {
  require(dseq.total() <= limits.complete_max, errc::too_large, "mini-vertex count exceeds the enumeration cap");
  auto space = MatchingSpace::complete(dseq.total());
  Int good = 0, total = 0;
  for_each_perfect_matching(space, [&](const std::vector<int>& partner) {
    ++total;
    if (girth_at_least(project(partner, dseq), g)) ++good;
  }, limits);
  return Rational(good) / Rational(total);
}

namespace {

/// Emit every matching on the mini-vertices whose projection is an i-cycle
/// on the class sequence `cycle` (distinct classes, canonical rotation and
/// reflection fixed by the caller). Chooses an ordered (in, out) pair per
/// class; edges join out of class j to in of class j+1.
void emit_cycle_matchings(const DegreeSequence& dseq, const std::vector<int>& cycle,
                          std::vector<Matching>& out) {
  const int len = static_cast<int>(cycle.size());
  std::vector<std::pair<int, int>> inout(len); // (in, out) mini indices
  std::vector<Edge> edges(len);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == len) {
      for (int t = 0; t < len; ++t)
        edges[t] = make_edge(inout[t].second + 1, inout[(t + 1) % len].first + 1);
      out.push_back(canonical_form(edges));
      return;
    }
    auto [b, e] = dseq.block(cycle[j]);
    for (int in = b; in < e; ++in)
      for (int outv = b; outv < e; ++outv) {
        if (in == outv) continue;
        inout[j] = {in, outv};
        self(self, j + 1);
      }
  };
  rec(rec, 0);
}

} // namespace

EventFamily cycle_event_family(const DegreeSequence& dseq, int g, std::size_t max_members) {
  require(g >= 2, errc::bad_params, "cycle family needs g >= 2");
  const int n = dseq.n();
  std::vector<Matching> members;
  auto guard = [&] {
    require(members.size() <= max_members, errc::too_large, "cycle family exceeds the member cap");
  };

  // length 1: loops, one matching per mini-vertex pair inside a class
  for (int c = 0; c < n; ++c) {
    auto [b, e] = dseq.block(c);
    for (int x = b; x < e; ++x)
      for (int y = x + 1; y < e; ++y) members.push_back(canonical_form({make_edge(x + 1, y + 1)}));
    guard();
  }
  // length 2: parallel edge pairs between two classes
  if (g >= 3) {
    for (int c1 = 0; c1 < n; ++c1)
      for (int c2 = c1 + 1; c2 < n; ++c2) {
        auto [b1, e1] = dseq.block(c1);
        auto [b2, e2] = dseq.block(c2);
        for (int x = b1; x < e1; ++x)
          for (int y = x + 1; y < e1; ++y)
            for (int u = b2; u < e2; ++u)
              for (int v = u + 1; v < e2; ++v) {
                members.push_back(canonical_form({make_edge(x + 1, u + 1), make_edge(y + 1, v + 1)}));
                members.push_back(canonical_form({make_edge(x + 1, v + 1), make_edge(y + 1, u + 1)}));
              }
        guard();
      }
  }
  // length >= 3: class sequences with the smallest class first and the
  // direction fixed by second < last (reflection gives the same matchings)
  for (int len = 3; len <= g - 1; ++len) {
    std::vector<int> cycle(len);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int j) -> void {
      if (j == len) {
        if (cycle[1] < cycle[len - 1]) emit_cycle_matchings(dseq, cycle, members);
        return;
      }
      for (int c = cycle[0] + 1; c < n; ++c) {
        if (used[c]) continue;
        used[c] = 1;
        cycle[j] = c;
        self(self, j + 1);
        used[c] = 0;
      }
    };
    for (int first = 0; first + len <= n; ++first) {
      cycle[0] = first;
      used[first] = 1;
      rec(rec, 1);
      used[first] = 0;
      guard();
    }
  }
  return EventFamily(MatchingSpace::complete(dseq.total()), std::move(members));
}

RegularCountEstimates regular_count_estimates(int n, int d, int g) {
  require(n >= 1 && d >= 1, errc::bad_params, "need n, d >= 1");
  require(static_cast<long long>(n) * d % 2 == 0, errc::odd_product, "nd must be even");
  require(g >= 3, errc::bad_params, "girth threshold must be at least 3");
  const double dn = static_cast<double>(n) * d;
  const double log_matchings = std::lgamma(dn + 1) - std::lgamma(dn / 2 + 1) - (dn / 2) * std::log(2.0)
                               - n * std::lgamma(d + 1.0);
  double cycle_sum = 0;
  double power = 1;
  for (int i = 1; i <= g - 1; ++i) {
    power *= (d - 1);
    cycle_sum += power / (2.0 * i);
  }
  RegularCountEstimates est;
  est.simple_count.log_value = (1.0 - d * static_cast<double>(d)) / 4.0 + log_matchings;
  est.simple_count.value = std::exp(est.simple_count.log_value);
  est.girth_at_least_count.log_value = -cycle_sum + log_matchings;
  est.girth_at_least_count.value = std::exp(est.girth_at_least_count.log_value);
  return est;
}

namespace {

/// DFS over adjacency choices: vertices are completed in order, each picking
/// its remaining neighbors among higher-indexed vertices.
void count_regular(int n, int d, int v, int next, std::vector<int>& deg, Int& count) {
  if (v == n) {
    ++count;
    return;
  }
  if (deg[v] == d) {
    count_regular(n, d, v + 1, v + 2, deg, count);
    return;
  }
  const int missing = d - deg[v];
  // not enough capacity left among higher vertices
  int capacity = 0;
  for (int u = next; u < n; ++u) capacity += (d - deg[u] > 0);
  if (capacity < missing) return;
  for (int u = next; u < n; ++u) {
    if (deg[u] >= d) continue;
    if (n - u < missing) break;
    ++deg[v];
    ++deg[u];
    count_regular(n, d, v, u + 1, deg, count);
    --deg[v];
    --deg[u];
  }
}

} // namespace

Int exact_regular_count(int n, int d) {
  require(n >= 1 && d >= 1, errc::bad_params, "need n, d >= 1");
  if (static_cast<long long>(n) * d % 2 != 0) return 0;
  if (d > n - 1) return 0;
  require(n <= 14 && static_cast<long long>(n) * d <= 42, errc::too_large,
          "regular-graph brute force limited to n <= 14, nd <= 42");
  std::vector<int> deg(n, 0);
  Int count = 0;
  count_regular(n, d, 0, 1, deg, count);
  return count;
}

} // namespace matchbounds
