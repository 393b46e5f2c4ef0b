#include "shiftcode/orbit.hpp"

namespace shiftcode {

std::vector<Box> orbit_enclosures(const PolynomialMap& f, const Box& z, int steps) {
  std::vector<Box> orbit;
  orbit.reserve(static_cast<std::size_t>(steps) + 1);
  orbit.push_back(z);
  for (int j = 0; j < steps; ++j) orbit.push_back(f.eval(orbit.back()));
  return orbit;
}

std::vector<Box> box_orbit(const PolynomialMap& f, const Box& b, int steps, const DomainDisk& disk) {
  std::vector<Box> orbit;
  orbit.reserve(static_cast<std::size_t>(steps) + 1);
  orbit.push_back(b);
  const Box c = Box::point(b.mid());
  const Box offset = b - c;
  Box centre = c;
  Box derivative = Box::point(1.0, 0.0);
  for (int j = 0; j < steps && !disk.excludes(orbit.back()); ++j) {
    const Box& prev = orbit.back();
    derivative = derivative * f.eval_derivative(prev);
    centre = f.eval(centre);
    const Box naive = f.eval_horner(prev);
    const Box mean_value = centre + derivative * offset;
    const bool finite = derivative.re.mag() < 1e300 && derivative.im.mag() < 1e300;
    orbit.push_back(finite ? Box{intersect(naive.re, mean_value.re), intersect(naive.im, mean_value.im)}
                           : naive);
  }
  return orbit;
}

bool enters_cycle_avoiding_seed(std::span<const Box> orbit) {
  for (std::size_t j = 0; j < orbit.size() && orbit[j].is_point(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (orbit[i] == orbit[j]) return i >= 1;
    }
  }
  return false;
}

Membership level_membership(const DomainDisk& disk, std::span<const Box> orbit, int k) {
  bool all_inside = true;
  for (int j = 0; j <= k; ++j) {
    if (disk.excludes(orbit[j])) return Membership::kOutside;
    if (!disk.contains(orbit[j])) all_inside = false;
  }
  return all_inside ? Membership::kInside : Membership::kUnknown;
}

}  // namespace shiftcode
