#pragma once

#include <span>
#include <vector>

#include "shiftcode/polynomial_map.hpp"

namespace shiftcode {

/// Enclosures Z_0 = z, Z_{j+1} = f(Z_j) for j < steps.
std::vector<Box> orbit_enclosures(const PolynomialMap& f, const Box& z, int steps);

/// Enclosures B_j of f^j(b) for a box b, j = 0..steps.  Each B_j is the
/// intersection of f(B_{j-1}) with the mean-value form
/// f^j(c) + (f^j)'(b) (b - c), c the centre of b, which keeps the
/// enclosure within about one box width of the true image.  Stops early
/// (returning fewer boxes) after the first B_j certified outside `disk`.
std::vector<Box> box_orbit(const PolynomialMap& f, const Box& b, int steps, const DomainDisk& disk);

/// True when the orbit of an exact point is certified to run into a cycle
/// that does not contain orbit[0]: all enclosures up to a repetition are
/// points and orbit[i] == orbit[j] for some 1 <= i < j.
bool enters_cycle_avoiding_seed(std::span<const Box> orbit);

enum class Membership { kInside, kOutside, kUnknown };

/// Certified membership of the orbit's seed in {z : f^j(z) in U, j = 0..k}
/// (the level-k set of the restriction).  Needs orbit.size() > k.
Membership level_membership(const DomainDisk& disk, std::span<const Box> orbit, int k);

}  // namespace shiftcode
