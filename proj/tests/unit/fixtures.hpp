#pragma once

#include <string>
#include <vector>

#include "shiftcode/puzzle_tree.hpp"

namespace shiftcode::testing {

inline PolynomialMap real_map(const std::vector<std::string>& leading_first) {
  std::vector<DecimalComplex> c;
  for (const auto& a : leading_first) c.push_back({a, "0"});
  return PolynomialMap::from_decimal(std::move(c));
}

// z^2 - 6 on D(0, 4).
inline const PuzzleTree& quadratic_tree() {
  static const PuzzleTree tree = [] {
    const PolynomialMap f = real_map({"1", "0", "-6"});
    return build_tree(f, DomainDisk::centered(0, 0, 4), 8);
  }();
  return tree;
}

// z^3 - 12 z + 12 on D(0, 20): critical point 2 maps to the fixed point -4.
inline const PuzzleTree& cubic_tree() {
  static const PuzzleTree tree = [] {
    const PolynomialMap f = real_map({"1", "0", "-12", "12"});
    return build_tree(f, DomainDisk::centered(0, 0, 20), 5);
  }();
  return tree;
}

}  // namespace shiftcode::testing
