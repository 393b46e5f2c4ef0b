#pragma once

#include <string>
#include <vector>

#include "shiftcode/polynomial_map.hpp"

namespace shiftcode {

class PuzzleTree;

enum class CriticalStatus {
  kOutsideDomain,       // not in U' : not a critical point of the restriction
  kStaysWithinHorizon,  // in U' and the orbit stays in U' through the horizon
  kEscapes,             // in U' but the orbit leaves U'
  kUndecided,
};

const char* to_string(CriticalStatus status);

struct CriticalReport {
  int index = 0;
  CriticalStatus status = CriticalStatus::kUndecided;
  int escape_step = -1;   // first j with f^j(c) certified outside U
  bool periodic = false;  // exact orbit certified to return to c within horizon
  /// Exact orbit certified to enter a cycle not containing c, so c is never
  /// hit again.
  bool non_periodic_certified = false;
  /// Some orbit enclosure after step 0 meets the enclosure of c.
  bool may_return = false;
};

/// Checks of the generalized polynomial-like hypotheses on f : U' -> U.
struct RestrictionReport {
  int n_components = 0;
  std::vector<int> branch_degrees;  // d_1..d_N in canonical component order
  bool compactly_contained = false;
  bool boundary_contact = false;  // certified: closure of f^-1(U) meets the boundary of U
  std::vector<CriticalReport> critical;
  bool periodic_critical = false;
  bool hypothesis_ok = false;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

/// Needs a tree built to depth >= 1 (validation may be disabled in its
/// build policy).
RestrictionReport validate_restriction(const PolynomialMap& f, const DomainDisk& disk,
                                       const PuzzleTree& level1, int horizon);

}  // namespace shiftcode
