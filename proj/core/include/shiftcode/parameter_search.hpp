#pragma once

#include <string>

#include "shiftcode/polynomial_map.hpp"

namespace shiftcode {

/// Result of searching f_b(z) = z^3 - 3 a^2 z + b for a real b such that
/// the critical point a is strictly preperiodic: f^{m+p}(a) = f^m(a).
struct PreperiodicCubic {
  double b = 0.0;
  std::string b_decimal;  // shortest decimal that round-trips b
  int newton_steps = 0;
  bool converged = false;
  /// The exact map with coefficient b_decimal was certified strictly
  /// preperiodic at a by exact orbit arithmetic.
  bool certified = false;
  PolynomialMap map;
};

/// Newton iteration in b from `b0` (derivatives propagated along the orbit).
/// Integer-valued candidates within 1e-9 are snapped to the integer before
/// certification.
PreperiodicCubic find_preperiodic_cubic(double a, double b0, int preperiod = 1, int period = 1,
                                        int max_steps = 100);

}  // namespace shiftcode
