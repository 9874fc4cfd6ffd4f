#include "matchbounds/perm_latin.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "matchbounds/rounding.hpp"

namespace matchbounds {

namespace r = rounded;

Int derangement_count(int n) {
  require(n >= 0, errc::bad_params, "derangement count needs n >= 0");
  Int prev2 = 1, prev1 = 0; // D_0, D_1
  if (n == 0) return prev2;
  if (n == 1) return prev1;
  Int cur = 0;
  for (int i = 2; i <= n; ++i) {
    cur = Int(i - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

EventFamily k_cycle_event_family(int n, int k) {
  require(n >= 1 && k >= 1 && k <= n, errc::bad_params, "need 1 <= k <= n");
  std::vector<Matching> members;
  std::vector<int> subset(k);
  std::vector<int> tail(k > 0 ? k - 1 : 0);

  auto emit = [&] {
    // cycle subset[0] -> tail[0] -> ... -> tail[k-2] -> subset[0]
    std::vector<Edge> edges;
    int prev = subset[0];
    for (int t = 0; t < k - 1; ++t) {
      edges.push_back(make_edge(prev, -tail[t]));
      prev = tail[t];
    }
    edges.push_back(make_edge(prev, -subset[0]));
    members.push_back(canonical_form(std::move(edges)));
  };

  auto choose = [&](auto&& self, int next, int depth) -> void {
    if (depth == k) {
      if (k == 1) {
        emit();
        return;
      }
      std::copy(subset.begin() + 1, subset.end(), tail.begin());
      std::sort(tail.begin(), tail.end());
      do {
        emit();
      } while (std::next_permutation(tail.begin(), tail.end()));
      return;
    }
    for (int v = next; v <= n; ++v) {
      subset[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  choose(choose, 1, 0);
  return EventFamily(MatchingSpace::bipartite(n, n), std::move(members));
}

Int k_cycle_free_count_bruteforce(int n, int k) {
  require(n >= 1 && k >= 1 && k <= n, errc::bad_params, "need 1 <= k <= n");
  require(n <= 14, errc::too_large, "brute force limited to n <= 14");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int count = 0;
  std::vector<char> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    bool bad = false;
    for (int start = 0; start < n && !bad; ++start) {
      if (seen[start]) continue;
      int len = 0, v = start;
      while (!seen[v]) {
        seen[v] = 1;
        v = perm[v];
        ++len;
      }
      bad = (len == k);
    }
    if (!bad) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Int k_cycle_free_count_ie(int n, int k) {
  require(n >= 1 && k >= 1 && k <= n, errc::bad_params, "need 1 <= k <= n");
  const Int nfact = factorial(n);
  Int sum = 0;
  for (int j = 0; j * k <= n; ++j) {
    Int denom = factorial(j);
    for (int t = 0; t < j; ++t) denom *= k;
    Int term = nfact / denom; // exact: counts (set of j k-cycles, rest arbitrary)
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

Int k_cycle_free_count(int n, int k, int cross_check_max) {
  Int via_ie = k_cycle_free_count_ie(n, k);
  if (n <= cross_check_max) {
    Int via_brute = k_cycle_free_count_bruteforce(n, k);
    require(via_brute == via_ie, errc::bad_params,
            "cycle-count routes disagree (internal inconsistency)");
  }
  return via_ie;
}

Int permanent01(const std::vector<std::uint32_t>& rows, int n) {
  require(n >= 0 && n <= 20, errc::too_large, "permanent limited to n <= 20");
  require(static_cast<int>(rows.size()) == n, errc::dimension_mismatch, "need n row masks");
  if (n == 0) return 1;
  // Ryser: per(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i (row_i restricted to S)
  Int sum = 0;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    Int prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= std::popcount(rows[i] & s);
    if (prod == 0) continue;
    const int parity = (n - std::popcount(s)) % 2;
    sum += parity ? -prod : prod;
  }
  return sum;
}

void validate(const LatinRectangle& rect) {
  require(rect.k >= 0 && rect.n >= 1 && rect.k <= rect.n, errc::invalid_rectangle,
          "rectangle needs 0 <= k <= n");
  require(static_cast<int>(rect.rows.size()) == rect.k, errc::invalid_rectangle, "row count mismatch");
  for (const auto& row : rect.rows) {
    require(static_cast<int>(row.size()) == rect.n, errc::invalid_rectangle, "row length mismatch");
    std::vector<char> seen(rect.n + 1, 0);
    for (int v : row) {
      require(v >= 1 && v <= rect.n && !seen[v], errc::invalid_rectangle, "row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < rect.n; ++j) {
    std::vector<char> seen(rect.n + 1, 0);
    for (int i = 0; i < rect.k; ++i) {
      int v = rect.rows[i][j];
      require(!seen[v], errc::invalid_rectangle, "column repeats symbol " + std::to_string(v));
      seen[v] = 1;
    }
  }
}

namespace {

constexpr int kMaxLatinN = 8;

/// Canonical key of the column-usage masks under simultaneous column and
/// symbol relabeling: minimum over all symbol permutations of the sorted,
/// remapped masks packed into 8 bits per column.
std::uint64_t canonical_key(const std::array<std::uint8_t, kMaxLatinN>& cols, int n) {
  std::array<int, kMaxLatinN> sigma{};
  std::iota(sigma.begin(), sigma.begin() + n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::array<std::uint8_t, kMaxLatinN> remapped{};
    for (int c = 0; c < n; ++c) {
      std::uint32_t m = cols[c];
      std::uint8_t out = 0;
      while (m) {
        const int b = std::countr_zero(m);
        m &= m - 1;
        out |= static_cast<std::uint8_t>(1u << sigma[b]);
      }
      remapped[c] = out;
    }
    std::sort(remapped.begin(), remapped.begin() + n);
    std::uint64_t key = 0;
    for (int c = 0; c < n; ++c) key |= static_cast<std::uint64_t>(remapped[c]) << (8 * c);
    best = std::min(best, key);
  } while (std::next_permutation(sigma.begin(), sigma.begin() + n));
  return best;
}

void unpack_key(std::uint64_t key, int n, std::array<std::uint8_t, kMaxLatinN>& cols) {
  cols.fill(0);
  for (int c = 0; c < n; ++c) cols[c] = static_cast<std::uint8_t>((key >> (8 * c)) & 0xff);
}

/// Enumerates the valid next rows of a partial rectangle with column usage
/// `cols` (bit s set when symbol s already used in that column) and calls
/// `cb` with the new usage masks.
template <typename Cb>
void for_each_extension(const std::array<std::uint8_t, kMaxLatinN>& cols, int n, Cb&& cb) {
  std::array<std::uint8_t, kMaxLatinN> next = cols;
  const std::uint32_t full = (1u << n) - 1;
  auto rec = [&](auto&& self, int c, std::uint32_t used_symbols) -> void {
    if (c == n) {
      cb(next);
      return;
    }
    std::uint32_t avail = full & ~cols[c] & ~used_symbols;
    while (avail) {
      const int s = std::countr_zero(avail);
      avail &= avail - 1;
      next[c] = static_cast<std::uint8_t>(cols[c] | (1u << s));
      self(self, c + 1, used_symbols | (1u << s));
    }
    next[c] = cols[c];
  };
  rec(rec, 0, 0);
}

} // namespace

namespace {

Int class_extension_count(const std::array<std::uint8_t, kMaxLatinN>& cols, int n) {
  std::vector<std::uint32_t> avail(n);
  const std::uint32_t full = (1u << n) - 1;
  for (int c = 0; c < n; ++c) avail[c] = full & ~cols[c];
  return permanent01(avail, n);
}

} // namespace

std::vector<Int> latin_count_table(int n, int upto) {
  require(n >= 1 && n <= kMaxLatinN, errc::too_large, "rectangle counting limited to n <= 8");
  if (upto < 0) upto = n;
  require(upto <= n, errc::bad_params, "cannot have more rows than columns");
  std::vector<Int> table(upto + 1);
  table[0] = 1;
  if (upto == 0) return table;

  // All one-row rectangles share one class: every column holds a distinct
  // symbol. Starting here skips canonicalizing the n! first rows.
  std::array<std::uint8_t, kMaxLatinN> one_row{};
  for (int c = 0; c < n; ++c) one_row[c] = static_cast<std::uint8_t>(1u << c);
  std::map<std::uint64_t, Int> level;
  level[canonical_key(one_row, n)] = factorial(n);
  table[1] = factorial(n);

  std::array<std::uint8_t, kMaxLatinN> cols{};
  for (int t = 1; t < upto; ++t) {
    const bool last = (t + 1 == upto);
    std::map<std::uint64_t, Int> next_level;
    Int last_total = 0;
    for (const auto& [key, weight] : level) {
      unpack_key(key, n, cols);
      if (last) {
        // only the total is needed: extensions per rectangle = permanent of
        // the availability matrix
        last_total += weight * class_extension_count(cols, n);
        continue;
      }
      std::map<std::uint64_t, long long> transitions;
      for_each_extension(cols, n, [&](const std::array<std::uint8_t, kMaxLatinN>& next) {
        transitions[canonical_key(next, n)] += 1;
      });
      for (const auto& [nkey, mult] : transitions) next_level[nkey] += weight * mult;
    }
    if (last) {
      table[t + 1] = last_total;
      break;
    }
    level = std::move(next_level);
    Int total = 0;
    for (const auto& [key, weight] : level) total += weight;
    table[t + 1] = total;
  }
  return table;
}

Int latin_count_exact(int k, int n) {
  require(k >= 0 && k <= n, errc::bad_params, "need 0 <= k <= n");
  return latin_count_table(n, k)[static_cast<std::size_t>(k)];
}

Int latin_count_backtracking(int k, int n) {
  require(n >= 1 && n <= 6, errc::too_large, "backtracking counter limited to n <= 6");
  require(k >= 0 && k <= n, errc::bad_params, "need 0 <= k <= n");
  std::array<std::uint8_t, kMaxLatinN> cols{};
  Int count = 0;
  auto rec = [&](auto&& self, int row, const std::array<std::uint8_t, kMaxLatinN>& usage) -> void {
    if (row == k) {
      ++count;
      return;
    }
    for_each_extension(usage, n, [&](const std::array<std::uint8_t, kMaxLatinN>& next) {
      self(self, row + 1, next);
    });
  };
  rec(rec, 0, cols);
  return count;
}

LatinBoundsReport latin_bounds(int k, int n) {
  require(n >= 1 && k >= 1 && k <= n, errc::bad_params, "need 1 <= k <= n");
  LatinBoundsReport rep;

  double log_nfact_down = 0, log_nfact_up = 0;
  for (int i = 2; i <= n; ++i) {
    log_nfact_down = r::add_down(log_nfact_down, r::down(r::down(std::log(i))));
    log_nfact_up = r::add_up(log_nfact_up, r::up(r::up(std::log(i))));
  }

  double lower_log = r::mul_down(static_cast<double>(k), log_nfact_down);
  for (int t = 1; t <= k - 1; ++t) {
    const double lt = r::log1p_down(-static_cast<double>(t) / n);
    lower_log = r::add_down(lower_log, r::mul_down(static_cast<double>(n), lt));
  }
  rep.log_lower = lower_log;
  rep.lower = r::exp_down(lower_log);

  bool upper_ok = 8 * (k - 1) < n;
  if (upper_ok) {
    double upper_log = r::mul_up(static_cast<double>(k), log_nfact_up);
    for (int t = 1; t <= k - 1; ++t) {
      const double td = static_cast<double>(t), nd = static_cast<double>(n);
      const double term = r::add_up(-td / nd, r::div_up(r::mul_up(4.0 * td, td), nd * nd));
      upper_log = r::add_up(upper_log, r::mul_up(nd, r::log1p_up(term)));
    }
    rep.log_upper = upper_log;
    rep.upper = r::exp_up(upper_log);
  }

  const double kd = k, nd = n;
  rep.log_stein = kd * std::lgamma(nd + 1) - kd * (kd - 1) / 2.0 - kd * kd * kd / (6.0 * nd);
  rep.stein = std::exp(rep.log_stein);
  return rep;
}

std::pair<EventFamily, std::vector<std::vector<int>>> row_extension_family(const LatinRectangle& rect) {
  validate(rect);
  require(rect.k < rect.n, errc::invalid_rectangle, "rectangle already complete");
  std::vector<Matching> members;
  std::vector<std::vector<int>> partition(rect.n);
  for (int i = 0; i < rect.k; ++i)
    for (int j = 0; j < rect.n; ++j) {
      partition[j].push_back(static_cast<int>(members.size()));
      members.push_back(canonical_form({make_edge(j + 1, -rect.rows[i][j])}));
    }
  return {EventFamily(MatchingSpace::bipartite(rect.n, rect.n), std::move(members)), std::move(partition)};
}

Int extension_count(const LatinRectangle& rect) {
  validate(rect);
  std::vector<std::uint32_t> avail(rect.n, 0);
  const std::uint32_t full = (1u << rect.n) - 1;
  for (int j = 0; j < rect.n; ++j) {
    std::uint32_t used = 0;
    for (int i = 0; i < rect.k; ++i) used |= 1u << (rect.rows[i][j] - 1);
    avail[j] = full & ~used;
  }
  return permanent01(avail, rect.n);
}

} // namespace matchbounds
