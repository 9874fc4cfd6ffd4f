#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matchbounds/family.hpp"
#include "matchbounds/numeric.hpp"

namespace matchbounds {

/// Derangement numbers D_n.
Int derangement_count(int n);

/// The family of all k-cycle events of a random permutation of [n], encoded
/// as size-k matchings in K_{n,n}: the cycle (a_1 ... a_k) becomes the edges
/// (a_i, a_{i+1}'). There are C(n,k) (k-1)! members and mu = 1/k.
EventFamily k_cycle_event_family(int n, int k);

/// Permutations of [n] with no cycle of length exactly k, by explicit
/// iteration over all n! permutations.
Int k_cycle_free_count_bruteforce(int n, int k);

/// Same count via inclusion-exclusion: sum_j (-1)^j n!/(j! k^j).
Int k_cycle_free_count_ie(int n, int k);

/// Exact count; cross-checks the two routes against each other whenever the
/// brute-force path is feasible (n <= cross_check_max).
Int k_cycle_free_count(int n, int k, int cross_check_max = 10);

/// Permanent of a 0/1 matrix given as row bitmasks (Ryser inclusion-exclusion
/// over column subsets).
Int permanent01(const std::vector<std::uint32_t>& rows, int n);

/// k rows that are permutations of 1..n with no repeated entry in any column.
struct LatinRectangle {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> rows;
};

/// Throws invalid_rectangle unless rect satisfies both Latin properties.
void validate(const LatinRectangle& rect);

/// L(t,n) for t = 0..upto (default: up to n). Counts rectangles row by row
/// over isomorphism classes of the column/symbol usage graph (classes are
/// stable under relabeling both columns and symbols); each class extends by
/// the perfect matchings of its availability graph, and the final row count
/// is the permanent of the availability matrix.
std::vector<Int> latin_count_table(int n, int upto = -1);

/// Number of k x n Latin rectangles.
Int latin_count_exact(int k, int n);

/// Reference implementation by pure row-by-row backtracking; exponential,
/// for cross-checks at n <= 6.
Int latin_count_backtracking(int k, int n);

struct LatinBoundsReport {
  double log_lower = 0; ///< log of (n!)^k prod_t (1 - t/n)^n, rounded down
  double lower = 0;
  std::optional<double> log_upper; ///< log of (n!)^k prod_t (1 - t/n + 4t^2/n^2)^n
  std::optional<double> upper;     ///< empty when some 8t/n >= 1
  double log_stein = 0;            ///< log of (n!)^k e^{-C(k,2) - k^3/(6n)}
  double stein = 0;
};

/// Lower/upper bounds and the refined asymptotic reference for L(k,n),
/// evaluated in log space with directed rounding.
LatinBoundsReport latin_bounds(int k, int n);

/// The t*n single-edge events forbidding each cell of the next row (column
/// j must avoid the symbols above it), plus the partition of the members
/// into per-column classes for quotient_events.
std::pair<EventFamily, std::vector<std::vector<int>>> row_extension_family(const LatinRectangle& rect);

/// Number of valid next rows for a rectangle: the permanent of its
/// availability matrix.
Int extension_count(const LatinRectangle& rect);

} // namespace matchbounds
