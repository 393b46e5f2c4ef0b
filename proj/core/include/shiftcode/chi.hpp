#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftcode/puzzle_tree.hpp"

namespace shiftcode {

/// Starting point of a chi query.  `enclosure` contains z.  When
/// `critical` >= 0, f^steps_to_critical(z) is known to equal that critical
/// point exactly (z itself for steps_to_critical = 0).
struct ChiSeed {
  Box enclosure;
  int critical = -1;
  int steps_to_critical = 0;
};

ChiSeed point_seed(const Box& z);
ChiSeed critical_seed(const PolynomialMap& f, int critical);

/// Krawczyk certificate for the unique solution of f(z) = w inside a box
/// around `guess`, where w is the point described by `target`.  Returns
/// nothing when no radius in a small geometric range certifies.
std::optional<ChiSeed> preimage_seed(const PolynomialMap& f, const ChiSeed& target,
                                     std::complex<double> guess);

enum class ChiStatus { kCertified, kLowerBound };
const char* to_string(ChiStatus status);

struct CriticalHit {
  int step = 0;
  int critical = 0;
  int local_degree = 1;
};

struct ChiResult {
  std::int64_t value = 1;
  ChiStatus status = ChiStatus::kLowerBound;
  std::int64_t bound = 1;  // 2^{d'}
  std::vector<CriticalHit> hits;
  int steps_walked = 0;
  std::vector<int> chain;  // component chain of z through the tree depth
  std::string reason;
};

/// chi(z) = product of local degrees of f along the orbit of z.  Walks at
/// most `horizon` steps, multiplying by m + 1 at each certified hit of a
/// critical point of multiplicity m.  Certified when the cap 2^{d'} is
/// reached or every critical point of the restriction has been hit and is
/// certified never to recur; otherwise a lower bound.
/// Throws Error(kNotInCover) when z is certified outside the level set and
/// Error(kUndecided) when an orbit enclosure meets a critical enclosure
/// without a known identity.
ChiResult chi(const PuzzleTree& tree, const ChiSeed& seed, int horizon);

}  // namespace shiftcode
