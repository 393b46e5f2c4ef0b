#include "shiftcode/polynomial_map.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "shiftcode/errors.hpp"

namespace shiftcode {

namespace {

// value = (negative ? -1 : 1) * 0.digits * 10^exponent, digits without
// leading or trailing zeros ("" for zero).
struct CanonicalDecimal {
  bool negative = false;
  std::string digits;
  long exponent = 0;

  bool operator==(const CanonicalDecimal& o) const {
    if (digits.empty() && o.digits.empty()) return true;
    return negative == o.negative && digits == o.digits && exponent == o.exponent;
  }
};

bool canonicalize(std::string_view text, CanonicalDecimal& out) {
  std::size_t i = 0;
  out = {};
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    out.negative = text[i] == '-';
    ++i;
  }
  std::string mantissa;
  long point_shift = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      any_digit = true;
      if (seen_point) ++point_shift;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return false;
  long exp10 = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return false;
    ++i;
    const std::string rest(text.substr(i));
    if (rest.empty()) return false;
    std::size_t j = (rest[0] == '+' || rest[0] == '-') ? 1 : 0;
    if (j >= rest.size()) return false;
    for (std::size_t k = j; k < rest.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(rest[k]))) return false;
    }
    if (rest.size() > 8) return false;
    exp10 = std::strtol(rest.c_str(), nullptr, 10);
  }
  std::size_t first = mantissa.find_first_not_of('0');
  if (first == std::string::npos) {
    out.digits.clear();
    out.negative = false;
    return true;
  }
  const std::size_t last = mantissa.find_last_not_of('0');
  // mantissa value = int(mantissa) * 10^(exp10 - point_shift)
  out.digits = mantissa.substr(first, last - first + 1);
  const long integer_digits = static_cast<long>(mantissa.size() - first);
  out.exponent = integer_digits + exp10 - point_shift;
  return true;
}

Box horner(const std::vector<Box>& coeffs, const Box& z) {
  Box acc = coeffs.front();
  for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc * z + coeffs[i];
  return acc;
}

Box saturate(const Box& b) {
  constexpr double kHuge = 1e300;
  if (!(b.re.mag() < kHuge) || !(b.im.mag() < kHuge)) return {Interval::entire(), Interval::entire()};
  return b;
}

}  // namespace

Interval parse_decimal(std::string_view text) {
  CanonicalDecimal want;
  if (text.empty() || !canonicalize(text, want)) {
    throw Error(ErrorKind::kInvalidInput, "malformed decimal '" + std::string(text) + "'");
  }
  const std::string s(text);
  const double x = std::strtod(s.c_str(), nullptr);
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::kInvalidInput, "decimal out of range '" + s + "'");
  }
  // glibc prints the exact binary value when asked for enough digits.
  char buf[1200];
  std::snprintf(buf, sizeof buf, "%.1100e", x);
  CanonicalDecimal got;
  canonicalize(buf, got);
  if (got == want) return Interval(x);
  return {rounding::next_down(x), rounding::next_up(x)};
}

PolynomialMap PolynomialMap::from_decimal(std::vector<DecimalComplex> coefficients) {
  if (coefficients.size() < 3) {
    throw Error(ErrorKind::kInvalidInput, "polynomial degree must be at least 2");
  }
  PolynomialMap f;
  f.decimal_ = std::move(coefficients);
  f.coefficients_.reserve(f.decimal_.size());
  for (const auto& c : f.decimal_) f.coefficients_.push_back(c.enclosure());
  if (!(f.coefficients_.front() == Box::point(1.0, 0.0))) {
    throw Error(ErrorKind::kInvalidInput, "leading coefficient must be exactly 1");
  }
  f.critical_ = derive_critical_points(f.coefficients_);
  return f;
}

std::vector<Box> taylor_shift(const std::vector<Box>& leading_first, const Box& z0) {
  std::vector<Box> a = leading_first;
  std::vector<Box> b;
  const std::size_t n = a.size() - 1;
  b.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t len = a.size();
    std::vector<Box> quotient;
    quotient.reserve(len - 1);
    Box acc = a[0];
    for (std::size_t i = 1; i < len; ++i) {
      quotient.push_back(acc);
      acc = acc * z0 + a[i];
    }
    b.push_back(acc);
    if (quotient.empty()) break;
    a = std::move(quotient);
  }
  return b;
}

Box PolynomialMap::eval_horner(const Box& b) const { return saturate(horner(coefficients_, b)); }

Box PolynomialMap::eval(const Box& b) const {
  const Box plain = eval_horner(b);
  if (!(plain.re.mag() < 1e300) || !(plain.im.mag() < 1e300)) return plain;
  // Near-point boxes gain nothing from the centred form.
  const double scale = 1.0 + std::max(b.re.mag(), b.im.mag());
  if (b.re.width_up() < 0x1p-40 * scale && b.im.width_up() < 0x1p-40 * scale) return plain;
  // Centred form: f(c + t) expanded at the box midpoint.  Near critical
  // points it is much tighter than Horner on the box itself.
  thread_local std::vector<Box> a;
  a.assign(coefficients_.begin(), coefficients_.end());
  const Box c = Box::point(b.mid());
  const std::size_t n = a.size() - 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 1; i <= n - k; ++i) a[i] = a[i] + a[i - 1] * c;
  }
  const Box centred = saturate(horner(a, b - c));
  return {intersect(plain.re, centred.re), intersect(plain.im, centred.im)};
}

Box PolynomialMap::eval_derivative(const Box& b) const {
  const int d = degree();
  std::vector<Box> deriv;
  deriv.reserve(d);
  for (int j = 0; j < d; ++j) {
    deriv.push_back(Box{Interval(static_cast<double>(d - j)), Interval(0.0)} * coefficients_[j]);
  }
  return saturate(horner(deriv, b));
}

std::complex<double> PolynomialMap::approx(std::complex<double> z) const {
  std::complex<double> acc(1.0, 0.0);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) acc = acc * z + coefficients_[i].mid();
  return acc;
}

std::complex<double> PolynomialMap::approx_derivative(std::complex<double> z) const {
  const int d = degree();
  std::complex<double> acc(static_cast<double>(d), 0.0);
  for (int j = 1; j < d; ++j) acc = acc * z + static_cast<double>(d - j) * coefficients_[j].mid();
  return acc;
}

std::string PolynomialMap::to_string() const {
  std::ostringstream os;
  const int d = degree();
  os << "z^" << d;
  for (int j = 1; j <= d; ++j) {
    const auto& c = decimal_[j];
    const bool re_zero = parse_decimal(c.re) == Interval(0.0);
    const bool im_zero = parse_decimal(c.im) == Interval(0.0);
    if (re_zero && im_zero) continue;
    os << " + ";
    if (im_zero) {
      os << c.re;
    } else {
      os << '(' << c.re << (c.im.front() == '-' ? "" : "+") << c.im << "i)";
    }
    const int power = d - j;
    if (power >= 2) os << "*z^" << power;
    else if (power == 1) os << "*z";
  }
  return os.str();
}

double escape_radius(const PolynomialMap& f) {
  using namespace rounding;
  double r = 1.0;
  const auto& c = f.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i) {
    const double re = c[i].re.mag(), im = c[i].im.mag();
    double modulus;
    if (im == 0.0) modulus = re;
    else if (re == 0.0) modulus = im;
    else modulus = sqrt_up(add_up(mul_up(re, re), mul_up(im, im)));
    r = add_up(r, modulus);
  }
  return r;
}

DomainDisk DomainDisk::from_decimal(const DecimalComplex& center, std::string_view radius) {
  DomainDisk u{center.enclosure(), parse_decimal(radius)};
  if (!(u.radius.lo() > 0.0)) throw Error(ErrorKind::kInvalidInput, "disk radius must be positive");
  return u;
}

bool DomainDisk::possibly_meets(const Box& b) const {
  return b.squared_distance_to(center).lo() < sqr(radius).hi();
}

bool DomainDisk::contains(const Box& b) const {
  return b.squared_distance_to(center).hi() < sqr(radius).lo();
}

bool DomainDisk::excludes(const Box& b) const {
  return b.squared_distance_to(center).lo() >= sqr(radius).hi();
}

Box DomainDisk::bounding_box() const {
  const Box r{Interval(-radius.hi(), radius.hi()), Interval(-radius.hi(), radius.hi())};
  return center + r;
}

}  // namespace shiftcode
