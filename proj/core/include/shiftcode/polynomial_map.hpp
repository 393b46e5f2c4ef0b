#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "shiftcode/box.hpp"

namespace shiftcode {

/// Enclosure of an exact decimal literal such as "-6", "0.1" or "2.5e-3".
/// Representable values yield a point interval; all others the two
/// neighbouring doubles.  Throws Error(kInvalidInput) on malformed text.
Interval parse_decimal(std::string_view text);

/// Complex number given by exact decimal real and imaginary parts.
struct DecimalComplex {
  std::string re = "0";
  std::string im = "0";

  Box enclosure() const { return {parse_decimal(re), parse_decimal(im)}; }
  friend bool operator==(const DecimalComplex&, const DecimalComplex&) = default;
};

/// Certified root of f' with its multiplicity.  `exact` marks roots whose
/// enclosure is a single point proven to be the root.
struct CriticalPoint {
  Box enclosure;
  int multiplicity = 1;
  bool exact = false;

  std::complex<double> approx() const { return enclosure.mid(); }
};

/// Monic complex polynomial f(z) = z^d + a_{d-1} z^{d-1} + ... + a_0.
class PolynomialMap {
 public:
  /// Coefficients leading first; the first must be exactly 1.
  /// Computes and certifies the critical points; throws Error on invalid
  /// input or kPrecisionExceeded when critical points cannot be separated.
  static PolynomialMap from_decimal(std::vector<DecimalComplex> coefficients);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<DecimalComplex>& decimal_coefficients() const { return decimal_; }
  /// Interval coefficients, leading first.
  const std::vector<Box>& coefficients() const { return coefficients_; }
  const std::vector<CriticalPoint>& critical_points() const { return critical_; }

  /// Certified enclosure of {f(z) : z in b}; an overflowing result is
  /// reported as the entire plane.
  Box eval(const Box& b) const;
  /// Plain Horner enclosure; cheaper, looser than eval() on wide boxes.
  Box eval_horner(const Box& b) const;
  /// Enclosure of f'(z) over b.
  Box eval_derivative(const Box& b) const;

  std::complex<double> approx(std::complex<double> z) const;
  std::complex<double> approx_derivative(std::complex<double> z) const;

  /// Human-readable form, e.g. "z^3 + -12*z + 12".
  std::string to_string() const;

 private:
  std::vector<DecimalComplex> decimal_;
  std::vector<Box> coefficients_;
  std::vector<CriticalPoint> critical_;
};

/// Free-function spelling of the certified image enclosure.
inline Box eval_enclosure(const PolynomialMap& f, const Box& b) { return f.eval(b); }

/// Coefficients of q(z0 + w) in ascending powers of w, for q given leading
/// first.
std::vector<Box> taylor_shift(const std::vector<Box>& leading_first, const Box& z0);

/// Certified enclosures of all roots of f' (pairwise disjoint, one per
/// distinct root) with multiplicities summing to d - 1.
std::vector<CriticalPoint> derive_critical_points(const std::vector<Box>& coefficients);

/// R = 1 + sum |a_i| over the non-leading coefficients, rounded up.  For
/// |z| >= R one has |f(z)| > |z|.
double escape_radius(const PolynomialMap& f);

/// Open disk U = D(center, radius).
struct DomainDisk {
  Box center;
  Interval radius;

  static DomainDisk from_decimal(const DecimalComplex& center, std::string_view radius);
  static DomainDisk centered(double re, double im, double radius) {
    return {Box::point(re, im), Interval(radius)};
  }

  /// Box may meet U.
  bool possibly_meets(const Box& b) const;
  /// Box lies inside U.
  bool contains(const Box& b) const;
  /// Box is disjoint from U.
  bool excludes(const Box& b) const;
  /// Bounding square of U, outward rounded.
  Box bounding_box() const;
};

}  // namespace shiftcode
