#pragma once

#include <complex>
#include <ostream>

#include "shiftcode/interval.hpp"

namespace shiftcode {

/// Axis-aligned rectangle in the complex plane; doubles as a rectangular
/// complex interval.  Arithmetic encloses the exact complex result.
struct Box {
  Interval re;
  Interval im;

  constexpr Box() = default;
  constexpr Box(Interval r, Interval i) : re(r), im(i) {}
  static Box point(double x, double y) { return {Interval(x), Interval(y)}; }
  static Box point(std::complex<double> z) { return point(z.real(), z.imag()); }
  static Box from_bounds(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {Interval(re_lo, re_hi), Interval(im_lo, im_hi)};
  }
  /// Square [c.re - r, c.re + r] x [c.im - r, c.im + r], outward rounded.
  static Box around(std::complex<double> c, double r) {
    using namespace rounding;
    return from_bounds(sub_down(c.real(), r), add_up(c.real(), r), sub_down(c.imag(), r),
                       add_up(c.imag(), r));
  }

  double re_lo() const { return re.lo(); }
  double re_hi() const { return re.hi(); }
  double im_lo() const { return im.lo(); }
  double im_hi() const { return im.hi(); }

  bool is_point() const { return re.is_point() && im.is_point(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  std::complex<double> mid() const { return {re.mid(), im.mid()}; }

  bool contains(const Box& o) const { return re.contains(o.re) && im.contains(o.im); }
  bool contains_in_interior(const Box& o) const {
    return re.contains_in_interior(o.re) && im.contains_in_interior(o.im);
  }
  bool intersects(const Box& o) const { return re.intersects(o.re) && im.intersects(o.im); }

  /// Upper bound on the Euclidean diameter.
  double diameter_up() const {
    using namespace rounding;
    const double w = re.width_up(), h = im.width_up();
    return sqrt_up(add_up(mul_up(w, w), mul_up(h, h)));
  }

  /// Enclosure of |z - c|^2 over the box.
  Interval squared_distance_to(const Box& c) const {
    const Box d{re - c.re, im - c.im};
    return sqr(d.re) + sqr(d.im);
  }

  friend bool operator==(const Box&, const Box&) = default;

  friend Box operator+(const Box& a, const Box& b) { return {a.re + b.re, a.im + b.im}; }
  friend Box operator-(const Box& a, const Box& b) { return {a.re - b.re, a.im - b.im}; }
  friend Box operator*(const Box& a, const Box& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Box sqr(const Box& a) {
    return {sqr(a.re) - sqr(a.im), Interval(2.0) * a.re * a.im};
  }
  friend Box hull(const Box& a, const Box& b) { return {hull(a.re, b.re), hull(a.im, b.im)}; }

  friend std::ostream& operator<<(std::ostream& os, const Box& b) {
    return os << b.re << " + i" << b.im;
  }
};

}  // namespace shiftcode
