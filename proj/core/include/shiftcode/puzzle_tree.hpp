#pragma once

#include <cstddef>
#include <vector>

#include "shiftcode/component_graph.hpp"
#include "shiftcode/cover.hpp"
#include "shiftcode/polynomial_map.hpp"
#include "shiftcode/restriction.hpp"

namespace shiftcode {

/// Refinement budgets and hypothesis checking options for build_tree.
struct BuildPolicy {
  std::size_t max_boxes_per_level = 1'000'000;
  /// Absolute dyadic resolution cap of the base frame.
  int max_resolution = 50;
  /// Refinement steps allowed per component beyond its parent's resolution.
  int max_refine_steps = 16;
  int initial_resolution = 3;
  /// Orbit horizon for critical-point checks.
  int horizon = 20;
  /// Run validate_restriction after level 1 and throw on failure.
  bool validate = true;
  /// On certified boundary contact, retry with radius * (1 - radius_shrink).
  double radius_shrink = 0.0;
  int max_shrink_steps = 0;
  /// Witness points tried per cluster and refinement step.
  int max_witness_tries = 16;
};

/// Geometric data of a component: certified outer cover and its bounds.
struct Piece {
  BoxCover cover;
  Box bbox;
  double diameter_bound = 0.0;
  std::vector<int> critical_points;  // indices into map().critical_points()
};

/// Read-only view combining the combinatorial and geometric data.
struct Component {
  ComponentId id;
  const Node* node = nullptr;
  const Piece* piece = nullptr;
};

/// Levels of connected components of f^-k(U) with container and image
/// edges and certified degrees.  Immutable once built.
class PuzzleTree {
 public:
  const PolynomialMap& map() const { return map_; }
  const DomainDisk& disk() const { return disk_; }
  const Frame& frame() const { return frame_; }
  const BuildPolicy& policy() const { return policy_; }
  const ComponentGraph& graph() const { return graph_; }
  int depth() const { return graph_.depth(); }
  int degree() const { return graph_.degree; }

  const Piece& piece(int level, int index) const { return pieces_[level][index]; }
  const std::vector<Piece>& pieces(int level) const { return pieces_[level]; }
  Component component(int level, int index) const {
    return {{level, index}, &graph_.levels[level][index], &pieces_[level][index]};
  }

  /// Orbit enclosures of each critical point (length depth + horizon + 2).
  const std::vector<std::vector<Box>>& critical_orbits() const { return critical_orbits_; }
  /// Critical points certified inside U' (the restriction's critical set).
  std::vector<int> domain_critical_points() const;
  /// d' = d - N, the critical count of the restriction.
  int reduced_critical_count() const;

  const RestrictionReport& restriction() const { return restriction_; }
  std::size_t box_count(int level) const;

 private:
  friend class TreeBuilder;
  PolynomialMap map_;
  DomainDisk disk_;
  Frame frame_;
  BuildPolicy policy_;
  ComponentGraph graph_;
  std::vector<std::vector<Piece>> pieces_;
  std::vector<std::vector<Box>> critical_orbits_;
  RestrictionReport restriction_;
};

/// Builds levels 0..depth.  Throws Error(kResolutionExceeded /
/// kBudgetExceeded) when certification fails within budget,
/// Error(kHypothesisViolation) when the restriction is not polynomial-like.
PuzzleTree build_tree(const PolynomialMap& f, const DomainDisk& disk, int depth,
                      const BuildPolicy& policy = {});

/// Nested chain of component indices W_0 ⊃ ... ⊃ W_level containing z.
/// Throws Error(kNotInCover) when z is certified outside the level set and
/// Error(kUndecided) when membership cannot be certified.
std::vector<int> locate(const PuzzleTree& tree, const Box& z, int level);

struct CantorDiagnostic {
  std::vector<double> max_diameter;  // per level, upper bounds
  bool strictly_decreasing = false;
};

CantorDiagnostic cantor_diagnostic(const PuzzleTree& tree);

}  // namespace shiftcode
