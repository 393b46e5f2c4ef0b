#include "shiftcode/chi.hpp"

#include <algorithm>
#include <cmath>

#include "shiftcode/errors.hpp"
#include "shiftcode/orbit.hpp"

namespace shiftcode {

const char* to_string(ChiStatus status) {
  return status == ChiStatus::kCertified ? "certified" : "lower_bound";
}

ChiSeed point_seed(const Box& z) { return {z, -1, 0}; }

ChiSeed critical_seed(const PolynomialMap& f, int critical) {
  if (critical < 0 || critical >= static_cast<int>(f.critical_points().size())) {
    throw Error(ErrorKind::kInvalidInput, "no critical point with index " + std::to_string(critical));
  }
  return {f.critical_points()[critical].enclosure, critical, 0};
}

std::optional<ChiSeed> preimage_seed(const PolynomialMap& f, const ChiSeed& target,
                                     std::complex<double> guess) {
  const Box& w = target.enclosure;
  const std::complex<double> w_mid = w.mid();
  std::complex<double> m = guess;
  for (int i = 0; i < 60; ++i) {
    const std::complex<double> step = (f.approx(m) - w_mid) / f.approx_derivative(m);
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return std::nullopt;
    m -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(m))) break;
  }
  const std::complex<double> inv = 1.0 / f.approx_derivative(m);
  if (!std::isfinite(inv.real()) || !std::isfinite(inv.imag())) return std::nullopt;
  const Box M = Box::point(m);
  const Box Y = Box::point(inv);
  const Box one = Box::point(1.0, 0.0);
  const double scale = 1.0 + std::abs(m);
  // Krawczyk: K = m - Y(f(m) - w) + (1 - Y f'(X))(X - m) inside int X
  // proves a unique z in X with f(z) = w for every w in the target box.
  for (double r = 1e-13 * scale; r <= 1e-2 * scale; r *= 8.0) {
    const Box X = Box::around(m, r);
    const Box K = M - Y * (f.eval(M) - w) + (one - Y * f.eval_derivative(X)) * (X - M);
    if (X.contains_in_interior(K)) {
      return ChiSeed{K, target.critical, target.critical >= 0 ? target.steps_to_critical + 1 : 0};
    }
  }
  return std::nullopt;
}

ChiResult chi(const PuzzleTree& tree, const ChiSeed& seed, int horizon) {
  const PolynomialMap& f = tree.map();
  const DomainDisk& disk = tree.disk();
  const auto& critical = f.critical_points();
  if (horizon < 0) throw Error(ErrorKind::kInvalidInput, "horizon must be non-negative");

  ChiResult result;
  const int reduced = std::max(tree.reduced_critical_count(), 0);
  result.bound = std::int64_t{1} << std::min(reduced, 62);
  result.chain = locate(tree, seed.enclosure, tree.depth());

  const std::vector<int> domain = tree.domain_critical_points();
  std::vector<bool> hit(critical.size(), false);
  auto never_recurs = [&](int c) {
    return critical[c].exact && enters_cycle_avoiding_seed(tree.critical_orbits()[c]);
  };
  auto all_settled = [&] {
    for (int c : domain) {
      if (!hit[c] || !never_recurs(c)) return false;
    }
    return true;
  };

  Box z = seed.enclosure;
  int j = 0;
  bool walk_stopped = false;
  bool cycled = false;
  std::vector<Box> exact_states;
  for (; j <= horizon; ++j) {
    if (disk.excludes(z)) {
      throw Error(ErrorKind::kNotInCover, "orbit leaves U at step " + std::to_string(j));
    }
    if (!disk.contains(z)) {
      walk_stopped = true;
      result.reason = "orbit enclosure not certified inside U at step " + std::to_string(j);
      break;
    }
    int identity = -1;
    if (seed.critical >= 0 && j == seed.steps_to_critical) {
      identity = seed.critical;
    } else {
      for (int c : domain) {
        if (critical[c].exact && z.is_point() && z == critical[c].enclosure) identity = c;
      }
    }
    if (identity >= 0) {
      const int degree = critical[identity].multiplicity + 1;
      result.hits.push_back({j, identity, degree});
      result.value *= degree;
      hit[identity] = true;
      z = critical[identity].enclosure;
    } else {
      for (int c : domain) {
        if (z.intersects(critical[c].enclosure)) {
          throw Error(ErrorKind::kUndecided, "orbit meets the enclosure of critical point " +
                                                 std::to_string(c) + " at step " + std::to_string(j));
        }
      }
    }
    if (result.value > result.bound) {
      throw Error(ErrorKind::kInconsistentTree, "chi exceeds 2^{d'}");
    }
    if (result.value == result.bound || all_settled()) break;
    // An exact state seen before: the orbit repeats what was checked.
    if (z.is_point()) {
      if (std::find(exact_states.begin(), exact_states.end(), z) != exact_states.end()) {
        cycled = true;
        break;
      }
      exact_states.push_back(z);
    }
    z = f.eval(z);
  }
  result.steps_walked = std::min(j, horizon);

  if (result.value == result.bound) {
    result.status = ChiStatus::kCertified;
    result.reason = "reached the bound 2^{d'}";
  } else if (all_settled()) {
    result.status = ChiStatus::kCertified;
    result.reason = domain.empty() ? "the restriction has no critical points"
                                   : "every critical point of the restriction was hit and never recurs";
  } else if (cycled) {
    result.status = ChiStatus::kCertified;
    result.reason = "exact orbit entered a cycle";
  } else if (!walk_stopped) {
    result.reason = "orbit tail beyond the horizon is not certified critical-free";
  }
  return result;
}

}  // namespace shiftcode
