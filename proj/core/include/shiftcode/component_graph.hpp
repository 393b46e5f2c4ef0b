#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shiftcode {

/// Combinatorial data of one connected component W of f^-k(U).  Indices
/// refer to positions in the previous level (-1 at level 0).
struct Node {
  int container = -1;  // component of level k-1 containing W
  int image = -1;      // component of level k-1 equal to f(W)
  int local_degree = 1;
  std::int64_t cumulative_degree = 1;
  int critical_multiplicity = 0;  // critical points in W, with multiplicity

  friend bool operator==(const Node&, const Node&) = default;
};

struct ComponentId {
  int level = 0;
  int index = 0;
  friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

/// Levelwise component tree without geometry.  Level 0 holds the single
/// component U.  Shared by the geometric puzzle tree and the abstract
/// oracle trees.
struct ComponentGraph {
  int degree = 2;
  std::vector<std::vector<Node>> levels;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  const Node& node(int level, int index) const { return levels[level][index]; }
  const Node& node(ComponentId id) const { return levels[id.level][id.index]; }
  std::size_t size(int level) const { return levels[level].size(); }

  /// Level-(level+1) components with the given container.
  std::vector<int> children(int level, int index) const;
  /// Level-(level+1) components with the given image.
  std::vector<int> preimages(int level, int index) const;
};

/// Structural invariants: degree sums per image, cumulative degrees,
/// commuting square, sum of cumulative degrees = d^k, Riemann-Hurwitz
/// critical counts, and the per-parent split of local degree.
struct StructureReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

StructureReport check_structure(const ComponentGraph& graph);

}  // namespace shiftcode
