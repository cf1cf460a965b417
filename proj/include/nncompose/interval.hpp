#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace nncompose {

/// Closed real interval with outward rounding on every operation.
///
/// Rounding is emulated by stepping each bound one ulp outward after the
/// round-to-nearest result, which keeps the enclosure sound without touching
/// the FPU rounding mode.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  constexpr Interval(double v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
  constexpr Interval(double l, double h) : lo(l), hi(h) {}

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  double mag() const { return std::max(std::abs(lo), std::abs(hi)); }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

namespace detail {
inline double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
}  // namespace detail

inline Interval widen(Interval a) { return {detail::down(a.lo), detail::up(a.hi)}; }

inline Interval operator+(Interval a, Interval b) { return widen({a.lo + b.lo, a.hi + b.hi}); }
inline Interval operator-(Interval a, Interval b) { return widen({a.lo - b.hi, a.hi - b.lo}); }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
  if (a.lo == a.hi && b.lo == b.hi) {
    const double p = a.lo * b.lo;
    return widen({p, p});
  }
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return widen({std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})});
}

inline Interval& operator+=(Interval& a, Interval b) { return a = a + b; }

inline Interval hull(Interval a, Interval b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

/// Interval cosine. Exact extrema are detected from the multiples of pi
/// enclosed by the argument; endpoint values are widened by an absolute
/// 1e-15 to absorb libm error and the inexact double value of pi.
inline Interval cos(Interval a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(a.hi - a.lo < two_pi)) return {-1.0, 1.0};
  const double c1 = std::cos(a.lo), c2 = std::cos(a.hi);
  double lo = std::min(c1, c2), hi = std::max(c1, c2);
  // Any k*2pi in [a.lo, a.hi] -> max 1; any pi + k*2pi -> min -1.
  const double k_max = std::ceil(a.lo / two_pi);
  if (k_max * two_pi <= a.hi) hi = 1.0;
  const double k_min = std::ceil((a.lo - std::numbers::pi) / two_pi);
  if (std::numbers::pi + k_min * two_pi <= a.hi) lo = -1.0;
  constexpr double slack = 1e-15;
  lo = std::max(-1.0, lo - slack);
  hi = std::min(1.0, hi + slack);
  return {lo, hi};
}

inline Interval sin(Interval a) { return cos(a - Interval(std::numbers::pi / 2.0)); }

using IntervalVector = std::vector<Interval>;

}  // namespace nncompose
