#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "matchbounds/error.hpp"

namespace matchbounds {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// n (n-2) (n-4) ... down to 1 or 2; (-1)!! = 1 by convention.
inline Int double_factorial(long n) {
  Int r = 1;
  for (long i = n; i > 1; i -= 2) r *= i;
  return r;
}

/// n (n-1) ... (n-k+1)
inline Int falling_factorial(long n, long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i; // exact at every step
  }
  return r;
}

/// Exact binary value of a finite double as a rational.
inline Rational rational_from_double(double x) {
  require(std::isfinite(x), errc::bad_params, "rational_from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp); // |mant| in [0.5, 1)
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  if (exp > 0)
    r *= Rational(Int(1) << exp);
  else if (exp < 0)
    r /= Rational(Int(1) << -exp);
  return r;
}

/// Nearest double of a rational, safe for numerators and denominators far
/// beyond the double range (the quotient is formed at ~60-bit precision and
/// rescaled).
inline double rational_to_double(const Rational& q) {
  if (q == 0) return 0.0;
  Int a = numerator(q), b = denominator(q);
  const bool neg = a < 0;
  if (neg) a = -a;
  const long shift = 60 - (static_cast<long>(msb(a)) - static_cast<long>(msb(b)));
  if (shift > 0)
    a <<= shift;
  else if (shift < 0)
    b <<= -shift;
  const double d = (a / b).convert_to<double>() * std::ldexp(1.0, static_cast<int>(std::clamp(-shift, -2000L, 2000L)));
  return neg ? -d : d;
}

/// Double conversion adjusted so the result never exceeds the exact value
/// (round toward -inf).
inline double to_double_down(const Rational& q) {
  double d = rational_to_double(q);
  if (!std::isfinite(d)) return d < 0 ? d : std::numeric_limits<double>::max();
  while (rational_from_double(d) > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

/// Round toward +inf counterpart of to_double_down.
inline double to_double_up(const Rational& q) {
  double d = rational_to_double(q);
  if (!std::isfinite(d)) return d > 0 ? d : std::numeric_limits<double>::lowest();
  while (rational_from_double(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

inline std::string rational_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace matchbounds
