#include "shiftcode/interval.hpp"

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "shiftcode/box.hpp"

namespace shiftcode {
namespace {

using Rational = boost::multiprecision::cpp_rational;

Rational exact(double x) { return Rational(x); }

bool encloses(const Interval& i, const Rational& q) { return exact(i.lo()) <= q && q <= exact(i.hi()); }

double random_double(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-60, 60);
  return std::ldexp(mantissa(rng), exponent(rng));
}

Interval random_interval(std::mt19937_64& rng) {
  const double a = random_double(rng), b = random_double(rng);
  return {std::min(a, b), std::max(a, b)};
}

TEST(Rounding, ProductsEncloseExactValue) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const double a = random_double(rng), b = random_double(rng);
    const Rational p = exact(a) * exact(b);
    EXPECT_LE(exact(rounding::mul_down(a, b)), p);
    EXPECT_GE(exact(rounding::mul_up(a, b)), p);
  }
}

TEST(Rounding, SumsAndQuotientsEncloseExactValue) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const double a = random_double(rng), b = random_double(rng);
    const Rational s = exact(a) + exact(b);
    EXPECT_LE(exact(rounding::add_down(a, b)), s);
    EXPECT_GE(exact(rounding::add_up(a, b)), s);
    if (b != 0.0) {
      const Rational q = exact(a) / exact(b);
      EXPECT_LE(exact(rounding::div_down(a, b)), q);
      EXPECT_GE(exact(rounding::div_up(a, b)), q);
    }
  }
}

TEST(Rounding, ExactOperationsStayExact) {
  EXPECT_EQ(rounding::mul_down(3.0, -4.0), -12.0);
  EXPECT_EQ(rounding::mul_up(3.0, -4.0), -12.0);
  EXPECT_EQ(rounding::add_down(0.5, 0.25), 0.75);
  EXPECT_EQ(rounding::div_up(1.0, 4.0), 0.25);
  EXPECT_LT(rounding::div_down(1.0, 3.0), rounding::div_up(1.0, 3.0));
}

TEST(Rounding, SqrtBrackets) {
  for (double x : {2.0, 3.0, 0.1, 1e-300, 1e300, 16.0}) {
    const double lo = rounding::sqrt_down(x), hi = rounding::sqrt_up(x);
    EXPECT_LE(exact(lo) * exact(lo), exact(x));
    EXPECT_GE(exact(hi) * exact(hi), exact(x));
  }
  EXPECT_EQ(rounding::sqrt_down(16.0), 4.0);
  EXPECT_EQ(rounding::sqrt_up(16.0), 4.0);
}

TEST(IntervalArithmetic, OperationsEncloseEveryCornerCombination) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5000; ++i) {
    const Interval a = random_interval(rng), b = random_interval(rng);
    for (double x : {a.lo(), a.hi(), a.mid()}) {
      for (double y : {b.lo(), b.hi(), b.mid()}) {
        if (!a.contains(x) || !b.contains(y)) continue;
        EXPECT_TRUE(encloses(a + b, exact(x) + exact(y)));
        EXPECT_TRUE(encloses(a - b, exact(x) - exact(y)));
        EXPECT_TRUE(encloses(a * b, exact(x) * exact(y)));
        if (!b.contains(0.0)) {
          EXPECT_TRUE(encloses(a / b, exact(x) / exact(y)));
        }
        EXPECT_TRUE(encloses(sqr(a), exact(x) * exact(x)));
      }
    }
  }
}

TEST(IntervalArithmetic, DivisionByIntervalContainingZeroIsEntire) {
  const Interval q = Interval(1.0) / Interval(-1.0, 1.0);
  EXPECT_EQ(q.lo(), -rounding::kInf);
  EXPECT_EQ(q.hi(), rounding::kInf);
}

TEST(IntervalArithmetic, PointTimesPointIsExactWhenRepresentable) {
  const Interval p = Interval(-4.0) * Interval(-4.0);
  EXPECT_TRUE(p.is_point());
  EXPECT_EQ(p.lo(), 16.0);
}

TEST(IntervalArithmetic, ProductUnderflowIsNotTreatedAsExactZero) {
  const Interval a(1e-200, 2e-200), b(-1e-200, -5e-201);
  const Interval p = a * b;
  EXPECT_LT(p.lo(), 0.0);
  EXPECT_TRUE(encloses(p, exact(1e-200) * exact(-1e-200)));
  EXPECT_TRUE(encloses(p, exact(2e-200) * exact(-5e-201)));
}

TEST(IntervalArithmetic, IntersectKeepsCommonPart) {
  const Interval a(0.0, 2.0), b(1.0, 3.0);
  const Interval c = intersect(a, b);
  EXPECT_EQ(c.lo(), 1.0);
  EXPECT_EQ(c.hi(), 2.0);
}

TEST(BoxArithmetic, ComplexProductEnclosesExactProduct) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const Box a{random_interval(rng), random_interval(rng)};
    const Box b{random_interval(rng), random_interval(rng)};
    const Rational ar = exact(a.re.mid()), ai = exact(a.im.mid());
    const Rational br = exact(b.re.mid()), bi = exact(b.im.mid());
    if (!a.re.contains(a.re.mid()) || !b.re.contains(b.re.mid())) continue;
    const Box p = a * b;
    EXPECT_TRUE(encloses(p.re, ar * br - ai * bi));
    EXPECT_TRUE(encloses(p.im, ar * bi + ai * br));
  }
}

TEST(BoxArithmetic, SquaredDistanceEnclosesExact) {
  const Box z = Box::point(3.0, 4.0);
  const Interval d = z.squared_distance_to(Box::point(0.0, 0.0));
  EXPECT_TRUE(d.is_point());
  EXPECT_EQ(d.lo(), 25.0);
}

}  // namespace
}  // namespace shiftcode
