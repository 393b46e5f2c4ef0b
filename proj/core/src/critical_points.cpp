// Certified isolation of the roots of f'.
//
// Approximate roots come from the Aberth-Ehrlich iteration; nearby
// approximations are grouped into clusters.  Each cluster of size m is then
// certified either as an exact root (snapped to a dyadic grid and checked by
// exact Taylor coefficients) or by Pellet's test: |b_m| rho^m exceeding
// sum_{j != m} |b_j| rho^j proves exactly m roots in D(z0, rho).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "shiftcode/errors.hpp"
#include "shiftcode/polynomial_map.hpp"

namespace shiftcode {

namespace {

using cd = std::complex<double>;

std::vector<cd> aberth_roots(const std::vector<cd>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<cd> monic(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) monic[i] = coeffs[i] / coeffs[0];
  if (n == 1) return {-monic[1]};

  double bound = 0.0;
  for (int i = 1; i <= n; ++i) bound = std::max(bound, std::abs(monic[i]));
  bound += 1.0;

  std::vector<cd> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(0.5 * bound, angle);
  }
  auto eval = [&](cd x, cd& value, cd& deriv) {
    value = monic[0];
    deriv = 0.0;
    for (int i = 1; i <= n; ++i) {
      deriv = deriv * x + value;
      value = value * x + monic[i];
    }
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      cd p, dp;
      eval(z[k], p, dp);
      if (p == cd(0.0)) continue;
      const cd ratio = p / dp;
      cd sum = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k && z[k] != z[j]) sum += 1.0 / (z[k] - z[j]);
      }
      const cd step = ratio / (1.0 - ratio * sum);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[k] -= step;
        max_step = std::max(max_step, std::abs(step));
      }
    }
    if (max_step <= 1e-17 * bound) break;
  }
  return z;
}

double modulus_up(const Box& b) {
  using namespace rounding;
  const double x = b.re.mag(), y = b.im.mag();
  return sqrt_up(add_up(mul_up(x, x), mul_up(y, y)));
}

double modulus_down(const Box& b) {
  using namespace rounding;
  const double x = b.re.mig(), y = b.im.mig();
  return sqrt_down(add_down(mul_down(x, x), mul_down(y, y)));
}

bool pellet_holds(const std::vector<Box>& shifted, int m, double rho) {
  using namespace rounding;
  double lhs = modulus_down(shifted[m]);
  for (int i = 0; i < m; ++i) lhs = mul_down(lhs, rho);
  double rhs = 0.0;
  double power = 1.0;
  for (std::size_t j = 0; j < shifted.size(); ++j) {
    if (static_cast<int>(j) != m) rhs = add_up(rhs, mul_up(modulus_up(shifted[j]), power));
    power = mul_up(power, rho);
  }
  return lhs > rhs;
}

bool is_exact_zero(const Box& b) { return b == Box::point(0.0, 0.0); }

struct Cluster {
  cd center;
  double spread = 0.0;
  int size = 0;
};

}  // namespace

std::vector<CriticalPoint> derive_critical_points(const std::vector<Box>& coefficients) {
  const int d = static_cast<int>(coefficients.size()) - 1;
  std::vector<Box> deriv;
  std::vector<cd> deriv_mid;
  for (int j = 0; j < d; ++j) {
    deriv.push_back(Box{Interval(static_cast<double>(d - j)), Interval(0.0)} * coefficients[j]);
    deriv_mid.push_back(deriv.back().mid());
  }

  std::vector<cd> roots = aberth_roots(deriv_mid);
  double scale = 1.0;
  for (const cd& r : roots) scale = std::max(scale, std::abs(r));
  const double tol = 1e-6 * scale;

  // Greedy single-linkage clustering, deterministic in root order after sort.
  std::sort(roots.begin(), roots.end(), [](const cd& a, const cd& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<int> label(roots.size(), -1);
  int n_clusters = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = n_clusters;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < roots.size(); ++b) {
        if (label[b] < 0 && std::abs(roots[a] - roots[b]) < tol) {
          label[b] = n_clusters;
          stack.push_back(b);
        }
      }
    }
    ++n_clusters;
  }
  std::vector<Cluster> clusters(n_clusters);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    clusters[label[i]].center += roots[i];
    clusters[label[i]].size += 1;
  }
  for (auto& c : clusters) c.center /= static_cast<double>(c.size);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto& c = clusters[label[i]];
    c.spread = std::max(c.spread, std::abs(roots[i] - c.center));
  }

  std::vector<CriticalPoint> result;
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    const Cluster& c = clusters[ci];
    const int m = c.size;

    // Exact root on a dyadic grid: b_0 .. b_{m-1} vanish exactly.
    bool certified = false;
    for (double grid : {0x1p-20, 0x1p-32}) {
      const cd snapped(std::round(c.center.real() / grid) * grid,
                       std::round(c.center.imag() / grid) * grid);
      if (std::abs(snapped - c.center) > std::max(tol, 1e3 * c.spread + 1e-9 * scale)) continue;
      const auto shifted = taylor_shift(deriv, Box::point(snapped));
      bool vanish = true;
      for (int j = 0; j < m && vanish; ++j) vanish = is_exact_zero(shifted[j]);
      if (vanish && modulus_down(shifted[m]) > 0.0) {
        result.push_back({Box::point(snapped), m, true});
        certified = true;
        break;
      }
    }
    if (certified) continue;

    double separation = std::numeric_limits<double>::infinity();
    for (std::size_t cj = 0; cj < clusters.size(); ++cj) {
      if (cj != ci) separation = std::min(separation, std::abs(clusters[cj].center - c.center));
    }
    const auto shifted = taylor_shift(deriv, Box::point(c.center));
    double rho = std::max(4.0 * c.spread, 1e-14 * scale);
    while (rho < 0.5 * separation && rho < 1e3 * scale) {
      if (pellet_holds(shifted, m, rho)) {
        result.push_back({Box::around(c.center, rho), m, false});
        certified = true;
        break;
      }
      rho *= 2.0;
    }
    if (!certified) {
      throw Error(ErrorKind::kPrecisionExceeded, "could not isolate a root of f' of multiplicity " +
                                                     std::to_string(m));
    }
  }

  for (std::size_t i = 0; i < result.size(); ++i) {
    for (std::size_t j = i + 1; j < result.size(); ++j) {
      if (result[i].enclosure.intersects(result[j].enclosure)) {
        throw Error(ErrorKind::kPrecisionExceeded, "critical point enclosures overlap");
      }
    }
  }
  int total = 0;
  for (const auto& cp : result) total += cp.multiplicity;
  if (total != d - 1) throw Error(ErrorKind::kPrecisionExceeded, "critical multiplicities do not sum to d-1");

  std::sort(result.begin(), result.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    const cd x = a.approx(), y = b.approx();
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return result;
}

}  // namespace shiftcode
