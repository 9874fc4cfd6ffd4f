#include "matchbounds/matching.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace matchbounds {

bool Matching::covers(Vertex v) const { return partner(v) != 0; }

Vertex Matching::partner(Vertex v) const {
  for (const auto& [a, b] : edges_) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return 0;
}

bool Matching::contains_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Matching::contains(const Matching& other) const {
  return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

Matching Matching::minus(const Matching& other) const {
  std::vector<Edge> rest;
  std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                      std::back_inserter(rest));
  return canonical_form(std::move(rest));
}

Matching canonical_form(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::set<Vertex> seen;
  for (const auto& [a, b] : edges) {
    require(seen.insert(a).second, errc::not_a_matching,
            "vertex " + std::to_string(a) + " covered twice");
    require(seen.insert(b).second, errc::not_a_matching,
            "vertex " + std::to_string(b) + " covered twice");
  }
  Matching m;
  m.edges_ = std::move(edges);
  return m;
}

bool in_conflict(const Matching& m1, const Matching& m2) {
  // Shared vertex with different partners. Identical edges are compatible.
  for (const auto& [a, b] : m1.edges()) {
    Vertex pa = m2.partner(a);
    if (pa != 0 && pa != b) return true;
    Vertex pb = m2.partner(b);
    if (pb != 0 && pb != a) return true;
  }
  return false;
}

MatchingSpace MatchingSpace::complete(int n) {
  require(n > 0 && n % 2 == 0, errc::bad_params, "complete space needs positive even N");
  return MatchingSpace(SpaceKind::complete, n, 0, {});
}

MatchingSpace MatchingSpace::bipartite(int n, int m) {
  require(n > 0 && m > 0 && m <= n, errc::bad_params, "bipartite space needs 0 < M <= N");
  return MatchingSpace(SpaceKind::bipartite, n, m, {});
}

MatchingSpace MatchingSpace::general(int n, std::vector<Edge> graph_edges) {
  require(n > 0, errc::bad_params, "general space needs a positive vertex count");
  for (auto& e : graph_edges) {
    e = make_edge(e.first, e.second);
    require(e.first >= 1 && e.second <= n, errc::bad_vertex, "graph edge outside 1..n");
  }
  std::sort(graph_edges.begin(), graph_edges.end());
  graph_edges.erase(std::unique(graph_edges.begin(), graph_edges.end()), graph_edges.end());
  return MatchingSpace(SpaceKind::general, n, 0, std::move(graph_edges));
}

int MatchingSpace::vertex_count() const {
  return kind_ == SpaceKind::bipartite ? n_ + m_ : n_;
}

int MatchingSpace::vertex_index(Vertex v) const {
  switch (kind_) {
    case SpaceKind::complete:
    case SpaceKind::general:
      require(v >= 1 && v <= n_, errc::bad_vertex, "vertex " + std::to_string(v) + " outside 1..N");
      return v - 1;
    case SpaceKind::bipartite:
      if (v >= 1) {
        require(v <= n_, errc::bad_vertex, "left vertex " + std::to_string(v) + " outside 1..N");
        return v - 1;
      }
      require(v <= -1 && v >= -m_, errc::bad_vertex, "right vertex " + std::to_string(v) + " outside -1..-M");
      return n_ + (-v) - 1;
  }
  fail(errc::bad_params, "unreachable");
}

Vertex MatchingSpace::vertex_label(int index) const {
  if (kind_ == SpaceKind::bipartite && index >= n_) return -(index - n_ + 1);
  return index + 1;
}

void MatchingSpace::validate(const Matching& m) const {
  for (const auto& [a, b] : m.edges()) {
    vertex_index(a);
    vertex_index(b);
    if (kind_ == SpaceKind::bipartite)
      require((a < 0) != (b < 0), errc::not_a_matching, "bipartite edge must join the two classes");
  }
}

} // namespace matchbounds
