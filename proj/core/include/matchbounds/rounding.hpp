#pragma once

#include <cmath>
#include <limits>

// Directed floating-point helpers. Every reported lower bound is rounded
// toward -inf and every upper bound toward +inf, so a bracket printed by the
// library is always an outer enclosure of the mathematically exact bracket.
// Arithmetic ops are correctly rounded by IEEE-754 and need one nextafter
// bump; libm's exp/log1p are faithful to within a couple of ulps, so those
// get two bumps.

namespace matchbounds::rounded {

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

// Trivially exact cases (zero or identity operands) take no bump; bumping
// an exact zero would even flip its sign.
inline double add_down(double a, double b) { return (a == 0 || b == 0) ? a + b : (a == -b ? 0.0 : down(a + b)); }
inline double add_up(double a, double b) { return (a == 0 || b == 0) ? a + b : (a == -b ? 0.0 : up(a + b)); }
inline double sub_down(double a, double b) { return b == 0 ? a : (a == b ? 0.0 : down(a - b)); }
inline double sub_up(double a, double b) { return b == 0 ? a : (a == b ? 0.0 : up(a - b)); }
inline double mul_down(double a, double b) {
  if (a == 0 || b == 0) return 0.0;
  if (a == 1 || b == 1) return a * b;
  return down(a * b);
}
inline double mul_up(double a, double b) {
  if (a == 0 || b == 0) return 0.0;
  if (a == 1 || b == 1) return a * b;
  return up(a * b);
}
inline double div_down(double a, double b) { return a == 0 ? 0.0 : (b == 1 ? a : down(a / b)); }
inline double div_up(double a, double b) { return a == 0 ? 0.0 : (b == 1 ? a : up(a / b)); }

inline double sqrt_down(double x) { return x <= 0 ? 0.0 : down(std::sqrt(x)); }
inline double sqrt_up(double x) { return x <= 0 ? 0.0 : up(std::sqrt(x)); }

inline double exp_down(double x) { return down(down(std::exp(x))); }
inline double exp_up(double x) { return up(up(std::exp(x))); }
inline double log1p_down(double x) { return down(down(std::log1p(x))); }
inline double log1p_up(double x) { return up(up(std::log1p(x))); }

/// Lower bound on (1-x)^k for x in [0,1], integer k >= 0 (k as double to
/// admit counts beyond 2^63). Evaluated in log space.
inline double pow1m_down(double x, double k) {
  if (k == 0) return 1.0;
  if (x >= 1.0) return 0.0;
  if (x <= 0.0) return 1.0; // x is a probability-like term; negatives clamp
  double lg = log1p_down(-x); // negative
  double s = mul_down(k, lg);
  return exp_down(s);
}

/// Upper bound on (1-x)^k.
inline double pow1m_up(double x, double k) {
  if (k == 0) return 1.0;
  if (x >= 1.0) return 0.0;
  if (x <= 0.0) return 1.0;
  double lg = log1p_up(-x);
  double s = mul_up(k, lg);
  double r = exp_up(s);
  return r > 1.0 ? 1.0 : r;
}

} // namespace matchbounds::rounded
