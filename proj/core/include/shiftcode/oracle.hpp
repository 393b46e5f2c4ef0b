#pragma once

#include <cstdint>
#include <vector>

#include "shiftcode/coding.hpp"
#include "shiftcode/component_graph.hpp"

namespace shiftcode {

/// Geometry-free component tree; same shape as a built PuzzleTree's graph.
using AbstractTree = ComponentGraph;

struct SplitPolicy {
  /// Each of the n - 1 gaps of a composition of n is cut with this
  /// probability; 0.5 is uniform over compositions, larger values favour
  /// small parts, 0 never splits and 1 always splits into ones.
  double cut_probability = 0.5;
  /// Fixed level-1 composition (must sum to d with at least two parts);
  /// drawn at random when empty.
  std::vector<int> level1;
};

/// Random admissible tree.  Level 1 is a composition of d into N >= 2 parts;
/// at level k every parent P gets, over each V with container(V) = image(P),
/// children whose local degrees compose local_degree(P).  Deterministic in
/// `seed`.
AbstractTree generate(std::uint64_t seed, int d, int depth, const SplitPolicy& policy = {});

/// Fiber sizes per level-k component by exhaustive enumeration of all d^k
/// words through a filled-in lookup table.  Throws Error(kBudgetExceeded)
/// past 2^24 words and Error(kInconsistentTree) when a word has no or
/// several components.
std::vector<std::int64_t> brute_force_fibers(const AbstractTree& tree, const SymbolAssignment& s, int k);

}  // namespace shiftcode
