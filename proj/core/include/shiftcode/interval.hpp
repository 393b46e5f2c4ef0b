// Outward-rounded interval arithmetic over IEEE doubles.
//
// Rounding is realized without touching the FPU rounding mode: every
// operation computes the round-to-nearest result together with its exact
// error term (TwoSum / TwoProduct) and steps one ulp outward only when the
// error is nonzero.  Exact operations therefore stay exact, which keeps
// point intervals degenerate through integer-valued orbits.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace shiftcode {

namespace rounding {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double next_down(double x) { return std::nextafter(x, -kInf); }
inline double next_up(double x) { return std::nextafter(x, kInf); }

// Error of a + b, exact when no overflow occurs.
inline double two_sum_error(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

// Error of a * b via Dekker's splitting; valid away from overflow/underflow.
inline double two_product_error(double a, double b, double p) {
#if defined(FP_FAST_FMA)
  return std::fma(a, b, -p);
#else
  constexpr double kSplit = 134217729.0;  // 2^27 + 1
  const double ca = kSplit * a;
  const double ahi = ca - (ca - a);
  const double alo = a - ahi;
  const double cb = kSplit * b;
  const double bhi = cb - (cb - b);
  const double blo = b - bhi;
  return ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
#endif
}

inline double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return std::isnan(s) ? -kInf : (s > 0 ? std::numeric_limits<double>::max() : s);
  return two_sum_error(a, b, s) < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) return std::isnan(s) ? kInf : (s < 0 ? std::numeric_limits<double>::lowest() : s);
  return two_sum_error(a, b, s) > 0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

namespace detail {
// Splitting is exact only in a safe magnitude window; outside it we inflate.
inline bool product_error_reliable(double a, double b, double p) {
  const double aa = std::fabs(a), ab = std::fabs(b), ap = std::fabs(p);
  return aa < 1e290 && ab < 1e290 && (ap == 0.0 ? (aa == 0.0 || ab == 0.0) : ap > 1e-280);
}
}  // namespace detail

inline double mul_down(double a, double b) {
  const double p = a * b;
  if (std::isnan(p)) return -kInf;
  if (!std::isfinite(p)) return p > 0 ? std::numeric_limits<double>::max() : p;
  if (!detail::product_error_reliable(a, b, p)) return next_down(p);
  return two_product_error(a, b, p) < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  const double p = a * b;
  if (std::isnan(p)) return kInf;
  if (!std::isfinite(p)) return p < 0 ? std::numeric_limits<double>::lowest() : p;
  if (!detail::product_error_reliable(a, b, p)) return next_up(p);
  return two_product_error(a, b, p) > 0 ? next_up(p) : p;
}

// Division: remainder a - q*b decides the side of the true quotient.
inline double div_down(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return std::isnan(q) ? -kInf : (q > 0 ? std::numeric_limits<double>::max() : q);
  if (!detail::product_error_reliable(q, b, a == 0.0 ? 1.0 : a)) return next_down(q);
  const double qb = q * b;
  const double r = (a - qb) - two_product_error(q, b, qb);
  const double sign = (b > 0) ? r : -r;
  return sign < 0 ? next_down(q) : q;
}

inline double div_up(double a, double b) {
  const double q = a / b;
  if (!std::isfinite(q)) return std::isnan(q) ? kInf : (q < 0 ? std::numeric_limits<double>::lowest() : q);
  if (!detail::product_error_reliable(q, b, a == 0.0 ? 1.0 : a)) return next_up(q);
  const double qb = q * b;
  const double r = (a - qb) - two_product_error(q, b, qb);
  const double sign = (b > 0) ? r : -r;
  return sign > 0 ? next_up(q) : q;
}

// sqrt is correctly rounded, so one ulp in each direction is always safe.
inline double sqrt_down(double a) {
  if (a <= 0) return 0.0;
  const double s = std::sqrt(a);
  return mul_up(s, s) > a ? next_down(s) : s;
}
inline double sqrt_up(double a) {
  if (a <= 0) return 0.0;
  const double s = std::sqrt(a);
  return mul_down(s, s) < a ? next_up(s) : s;
}

}  // namespace rounding

/// Closed real interval [lo, hi] with outward-rounded operations.
class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(double point) : lo_(point), hi_(point) {}  // NOLINT implicit
  constexpr Interval(double lo, double hi) : lo_(lo), hi_(hi) {}

  static constexpr Interval entire() { return {-rounding::kInf, rounding::kInf}; }

  constexpr double lo() const { return lo_; }
  constexpr double hi() const { return hi_; }
  constexpr bool is_point() const { return lo_ == hi_; }
  constexpr bool is_finite() const {
    return lo_ > -rounding::kInf && hi_ < rounding::kInf;
  }

  double mid() const { return 0.5 * lo_ + 0.5 * hi_; }
  double width_up() const { return rounding::sub_up(hi_, lo_); }
  /// Upper bound on |x| over the interval.
  double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
  /// Lower bound on |x| over the interval.
  double mig() const {
    if (lo_ <= 0 && hi_ >= 0) return 0.0;
    return std::min(std::fabs(lo_), std::fabs(hi_));
  }

  constexpr bool contains(double x) const { return lo_ <= x && x <= hi_; }
  constexpr bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  constexpr bool contains_in_interior(const Interval& o) const {
    return lo_ < o.lo_ && o.hi_ < hi_;
  }
  constexpr bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {rounding::add_down(a.lo_, b.lo_), rounding::add_up(a.hi_, b.hi_)};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {rounding::sub_down(a.lo_, b.hi_), rounding::sub_up(a.hi_, b.lo_)};
  }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

  friend Interval operator*(const Interval& a, const Interval& b) {
    using namespace rounding;
    if (a.is_point() && b.is_point()) return {mul_down(a.lo_, b.lo_), mul_up(a.lo_, b.lo_)};
    // Wide operands: a round-to-nearest product is within half an ulp, so
    // one ulp outward on the extremes is enough.
    const double p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    if (std::isnan(p1) || std::isnan(p2) || std::isnan(p3) || std::isnan(p4)) return entire();
    const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    // A zero extreme is exact unless some product underflowed to zero.
    const bool underflow = (p1 == 0.0 && a.lo_ != 0.0 && b.lo_ != 0.0) ||
                           (p2 == 0.0 && a.lo_ != 0.0 && b.hi_ != 0.0) ||
                           (p3 == 0.0 && a.hi_ != 0.0 && b.lo_ != 0.0) ||
                           (p4 == 0.0 && a.hi_ != 0.0 && b.hi_ != 0.0);
    return {lo == 0.0 && !underflow ? 0.0 : next_down(lo), hi == 0.0 && !underflow ? 0.0 : next_up(hi)};
  }

  /// Division; returns the entire line when the divisor straddles zero.
  friend Interval operator/(const Interval& a, const Interval& b) {
    using namespace rounding;
    if (b.lo_ <= 0 && b.hi_ >= 0) return entire();
    double lo = kInf, hi = -kInf;
    for (double x : {a.lo_, a.hi_}) {
      for (double y : {b.lo_, b.hi_}) {
        lo = std::min(lo, div_down(x, y));
        hi = std::max(hi, div_up(x, y));
      }
    }
    return {lo, hi};
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend Interval sqr(const Interval& a) {
    using namespace rounding;
    const double m = a.mig(), M = a.mag();
    return {mul_down(m, m), mul_up(M, M)};
  }

  friend Interval sqrt(const Interval& a) {
    return {rounding::sqrt_down(a.lo_), rounding::sqrt_up(a.hi_)};
  }

  /// Intersection of two enclosures of the same quantity; falls back to a
  /// when they are disjoint.
  friend Interval intersect(const Interval& a, const Interval& b) {
    const double lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
    return lo <= hi ? Interval(lo, hi) : a;
  }

  friend Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << x.lo_ << ", " << x.hi_ << ']';
  }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

}  // namespace shiftcode
