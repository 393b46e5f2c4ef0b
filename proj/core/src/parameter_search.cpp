#include "shiftcode/parameter_search.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "shiftcode/errors.hpp"
#include "shiftcode/orbit.hpp"

namespace shiftcode {

namespace {

std::string shortest_decimal(double x) {
  char buf[64];
  for (int digits = 1; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

}  // namespace

PreperiodicCubic find_preperiodic_cubic(double a, double b0, int preperiod, int period, int max_steps) {
  if (preperiod < 1 || period < 1) {
    throw Error(ErrorKind::kInvalidInput, "preperiod and period must be positive");
  }
  const double c1 = -3.0 * a * a;
  PreperiodicCubic out;
  double b = b0;
  // g(b) = f^{m+p}(a) - f^m(a); dz tracks d f^n(a) / db.
  for (int step = 0; step < max_steps; ++step) {
    double z = a, dz = 0.0, zm = 0.0, dzm = 0.0;
    for (int n = 1; n <= preperiod + period; ++n) {
      dz = (3.0 * z * z + c1) * dz + 1.0;
      z = z * z * z + c1 * z + b;
      if (n == preperiod) {
        zm = z;
        dzm = dz;
      }
    }
    const double g = z - zm, dg = dz - dzm;
    if (!std::isfinite(g) || dg == 0.0) break;
    const double delta = g / dg;
    b -= delta;
    out.newton_steps = step + 1;
    if (std::fabs(delta) <= 1e-15 * (1.0 + std::fabs(b))) {
      out.converged = true;
      break;
    }
  }
  if (std::fabs(b - std::round(b)) < 1e-9) b = std::round(b);
  out.b = b;
  out.b_decimal = shortest_decimal(b);

  const std::string c1_decimal = shortest_decimal(c1);
  out.map = PolynomialMap::from_decimal({{"1", "0"}, {"0", "0"}, {c1_decimal, "0"}, {out.b_decimal, "0"}});
  const Box seed = Box::point(a, 0.0);
  const auto orbit = orbit_enclosures(out.map, seed, preperiod + period + 1);
  bool is_critical = false;
  for (const auto& cp : out.map.critical_points()) {
    if (cp.exact && cp.enclosure == seed) is_critical = true;
  }
  out.certified = is_critical && enters_cycle_avoiding_seed(orbit);
  return out;
}

}  // namespace shiftcode
