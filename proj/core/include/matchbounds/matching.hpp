#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "matchbounds/error.hpp"

namespace matchbounds {

/// Vertex label. Complete graphs use 1..N. Bipartite spaces label the left
/// class 1..N and the right class -1..-M, so a single edge type covers both.
using Vertex = int;

/// Unordered vertex pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) {
  require(a != b && a != 0 && b != 0, errc::not_a_matching, "edge endpoints must be distinct nonzero labels");
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// A partial matching in canonical form: endpoints sorted within each edge,
/// edges sorted lexicographically, no vertex covered twice. Equal matchings
/// compare equal bit for bit.
class Matching {
public:
  Matching() = default;

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool covers(Vertex v) const;
  /// Partner of v, or 0 when v is uncovered.
  Vertex partner(Vertex v) const;

  bool contains_edge(const Edge& e) const;
  /// True when every edge of `other` is an edge of this matching.
  bool contains(const Matching& other) const;

  /// Edges of this matching that are not edges of `other`.
  Matching minus(const Matching& other) const;

  auto operator<=>(const Matching&) const = default;

private:
  friend Matching canonical_form(std::vector<Edge> edges);
  std::vector<Edge> edges_;
};

/// Sorts and validates a list of vertex pairs into a Matching.
/// Throws not_a_matching when a vertex is covered twice.
Matching canonical_form(std::vector<Edge> edges);

/// True iff some vertex is covered by different edges in m1 and m2, i.e.
/// m1 and m2 do not extend to a common matching. Symmetric and irreflexive.
bool in_conflict(const Matching& m1, const Matching& m2);

enum class SpaceKind { complete, bipartite, general };

/// The uniform probability space of perfect matchings of K_N (N even), of
/// K_{N,M} with M <= N (matchings saturating the smaller side), or of an
/// arbitrary simple graph (used by the exact oracle only).
class MatchingSpace {
public:
  static MatchingSpace complete(int n);
  static MatchingSpace bipartite(int n, int m);
  static MatchingSpace general(int n, std::vector<Edge> graph_edges);

  SpaceKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }
  /// Total number of vertices (N, N+M, or n for a general graph).
  int vertex_count() const;
  const std::vector<Edge>& graph_edges() const { return graph_edges_; }

  /// Dense 0-based index for a vertex label; throws bad_vertex outside range.
  int vertex_index(Vertex v) const;
  /// Inverse of vertex_index.
  Vertex vertex_label(int index) const;

  /// Validates that m can sit inside this space (labels in range; bipartite
  /// edges joining the two classes). Throws bad_vertex / not_a_matching.
  void validate(const Matching& m) const;

private:
  MatchingSpace(SpaceKind kind, int n, int m, std::vector<Edge> edges)
      : kind_(kind), n_(n), m_(m), graph_edges_(std::move(edges)) {}

  SpaceKind kind_;
  int n_ = 0;
  int m_ = 0;
  std::vector<Edge> graph_edges_; // general only
};

} // namespace matchbounds
