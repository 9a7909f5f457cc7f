#pragma once

#include "mckay/cyclotomic.hpp"

#include <cmath>
#include <limits>

namespace mckay::detail {

// Closed interval of nonnegative reals with outward rounding: every operation
// widens its result by one ulp on each side, which covers the rounding error
// of a correctly rounded IEEE operation.
struct Interval {
  double lo = 0, hi = 0;

  static double down(double x) { return x <= 0 ? 0 : std::nextafter(x, 0.0); }
  static double up(double x) {
    const double y = std::nextafter(x, std::numeric_limits<double>::infinity());
    return y < std::numeric_limits<double>::min() ? std::numeric_limits<double>::min() : y;
  }

  static Interval exact_integer(const Integer& n) {
    const double d = n.get_d();  // truncates toward zero
    return {down(d), up(up(d))};
  }

  friend Interval operator+(Interval a, Interval b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
  friend Interval operator*(Interval a, Interval b) { return {down(a.lo * b.lo), up(a.hi * b.hi)}; }
};

inline Interval power(Interval base, unsigned long e) {
  Interval result{1, 1};
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// |value| / degree.
inline Interval ratio_magnitude(const Cyclotomic& value, const Integer& degree) {
  const double err = value.embed_error();
  const double mag = std::abs(value.embed());
  const Interval num{Interval::down(Interval::down(mag - err)), Interval::up(Interval::up(mag + err))};
  const Interval den = Interval::exact_integer(degree);
  return {Interval::down(num.lo / den.hi), Interval::up(num.hi / den.lo)};
}

}  // namespace mckay::detail
