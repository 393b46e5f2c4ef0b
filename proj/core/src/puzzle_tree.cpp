// Levelwise construction of the components of f^-k(U).
//
// Each level-k component lies in a unique level-(k-1) parent P and maps onto
// a level-(k-1) component V whose container is f(P).  For every parent we
// refine its cover dyadically, keep the cells whose image may meet one of
// the candidate V covers, and split the result into edge-connected clusters.
// A cluster is accepted as (the cover of) exactly one component when
//   (a) it is separated from the other clusters by at least one empty cell,
//   (b) every cell of the cluster hits the same single V,
//   (c) a witness point of the cluster is certified in f^-k(U),
//   (d) no critical point certified in f^-k(U) meets it and another cluster.
// Accepted clusters are frozen and only the rest is refined further.  Finally,
// per V, the sum over clusters of (1 + critical multiplicity) must equal d.
// The last condition rules out clusters holding several components: each
// holds at least one (witness), and the true degree sum is exactly d.

#include "shiftcode/puzzle_tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "shiftcode/errors.hpp"
#include "shiftcode/orbit.hpp"

namespace shiftcode {

class TreeBuilder {
 public:
  TreeBuilder(const PolynomialMap& f, const DomainDisk& disk, const BuildPolicy& policy, int depth);
  PuzzleTree build();

 private:
  struct Cluster {
    int parent = 0;
    int image = 0;
    BoxCover cover;
    std::vector<int> critical;
  };
  using HitCell = std::pair<Cell, int>;  // image index, or -2 for several

  void build_level0();
  void build_level(int k);
  std::vector<Cluster> process_parent(int k, int parent, int min_resolution) const;
  std::vector<int> level_critical(int k, int parent) const;
  bool has_witness(int k, const BoxCover& cluster) const;
  Membership critical_membership(int c, int k) const;

  PuzzleTree tree_;
  int depth_;
  // level k-1 components grouped by container, for target lookup
  std::map<int, std::vector<int>> targets_by_container_;
};

TreeBuilder::TreeBuilder(const PolynomialMap& f, const DomainDisk& disk, const BuildPolicy& policy,
                         int depth)
    : depth_(depth) {
  tree_.map_ = f;
  tree_.disk_ = disk;
  tree_.frame_ = Frame::enclosing(disk);
  tree_.policy_ = policy;
  tree_.graph_.degree = f.degree();
  const int orbit_len = depth + std::max(policy.horizon, 0) + 1;
  for (const auto& cp : f.critical_points()) {
    tree_.critical_orbits_.push_back(orbit_enclosures(f, cp.enclosure, orbit_len));
  }
}

Membership TreeBuilder::critical_membership(int c, int k) const {
  return level_membership(tree_.disk_, tree_.critical_orbits_[c], k);
}

PuzzleTree TreeBuilder::build() {
  build_level0();
  for (int k = 1; k <= depth_; ++k) {
    build_level(k);
    if (k == 1) {
      tree_.restriction_ =
          validate_restriction(tree_.map_, tree_.disk_, tree_, tree_.policy_.horizon);
      if (tree_.policy_.validate && !tree_.restriction_.hypothesis_ok) {
        std::ostringstream os;
        os << "restriction is not a Cantor polynomial-like map:";
        for (const auto& f : tree_.restriction_.failures) os << ' ' << f << ';';
        throw Error(ErrorKind::kHypothesisViolation, os.str());
      }
    }
  }
  return std::move(tree_);
}

void TreeBuilder::build_level0() {
  const auto& disk = tree_.disk_;
  Piece root;
  root.cover = disk_cover(tree_.frame_, tree_.policy_.initial_resolution, disk);
  root.bbox = disk.bounding_box();
  root.diameter_bound = rounding::mul_up(2.0, disk.radius.hi());
  for (int c = 0; c < static_cast<int>(tree_.critical_orbits_.size()); ++c) {
    if (critical_membership(c, 0) == Membership::kInside) root.critical_points.push_back(c);
  }
  tree_.graph_.levels.push_back({Node{}});
  tree_.pieces_.push_back({std::move(root)});
}

bool TreeBuilder::has_witness(int k, const BoxCover& cluster) const {
  const auto& cells = cluster.cells();
  std::vector<Cell> interior, boundary;
  for (const Cell& c : cells) {
    const bool inner = cluster.contains({c.i + 1, c.j}) && cluster.contains({c.i - 1, c.j}) &&
                       cluster.contains({c.i, c.j + 1}) && cluster.contains({c.i, c.j - 1});
    (inner ? interior : boundary).push_back(c);
  }
  int budget = tree_.policy_.max_witness_tries;
  for (const auto* group : {&interior, &boundary}) {
    const std::size_t n = group->size();
    const std::size_t tries = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(budget, 0)));
    for (std::size_t t = 0; t < tries; ++t) {
      const Cell c = (*group)[t * n / tries];
      const Box inner = cluster.frame().cell_inner_box(cluster.resolution(), c);
      if (!(inner.re_lo() < inner.re_hi()) || !(inner.im_lo() < inner.im_hi())) continue;
      const auto p = inner.mid();
      if (!inner.contains(Box::point(p))) continue;
      const auto orbit = orbit_enclosures(tree_.map_, Box::point(p), k);
      if (level_membership(tree_.disk_, orbit, k) == Membership::kInside) return true;
    }
    budget -= static_cast<int>(tries);
  }
  return false;
}

std::vector<int> TreeBuilder::level_critical(int k, int parent) const {
  const Piece& parent_piece = tree_.pieces_[k - 1][parent];
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(tree_.critical_orbits_.size()); ++c) {
    if (!parent_piece.cover.meets(tree_.critical_orbits_[c][0])) continue;
    const Membership m = critical_membership(c, k);
    if (m == Membership::kOutside) continue;
    if (m == Membership::kUnknown) {
      throw Error(ErrorKind::kUndecided, "membership of critical point " + std::to_string(c) +
                                             " in level " + std::to_string(k) +
                                             " cannot be certified");
    }
    out.push_back(c);
  }
  return out;
}

std::vector<TreeBuilder::Cluster> TreeBuilder::process_parent(int k, int parent,
                                                              int min_resolution) const {
  const auto& policy = tree_.policy_;
  const auto& disk = tree_.disk_;
  const auto& f = tree_.map_;
  const Piece& source = tree_.pieces_[k - 1][parent];
  const std::vector<int> critical = level_critical(k, parent);

  std::vector<int> targets;
  if (k >= 2) {
    const int image_of_parent = tree_.graph_.levels[k - 1][parent].image;
    auto it = targets_by_container_.find(image_of_parent);
    if (it != targets_by_container_.end()) targets = it->second;
  }
  const auto& target_pieces = tree_.pieces_[k - 1];

  // Clusters are frozen once certified; refinement only removes cells, so
  // the empty ring around a frozen cluster stays empty.
  std::vector<Cluster> frozen;
  BoxCover cover = source.cover;
  const int start = cover.resolution();
  for (int step = 1; step <= policy.max_refine_steps; ++step) {
    if (cover.resolution() + 1 > policy.max_resolution ||
        tree_.frame_.cell_side(cover.resolution() + 1) < 1e-13 * tree_.frame_.side) {
      break;
    }
    const BoxCover refined = refine(cover, policy.max_boxes_per_level);
    std::vector<HitCell> hits;
    std::vector<Cell> kept;
    for (const Cell& c : refined.cells()) {
      const Box box = refined.cell_box(c);
      int hit = -1;
      if (k == 1) {
        hit = 0;
      } else {
        const Box image = f.eval(box);
        for (int v : targets) {
          const Piece& t = target_pieces[v];
          if (!t.bbox.intersects(image) || !t.cover.meets(image)) continue;
          hit = (hit < 0 || hit == v) ? v : -2;
        }
      }
      if (hit == -1) continue;
      const auto orbit = box_orbit(f, box, k, disk);
      if (static_cast<int>(orbit.size()) > k && !disk.excludes(orbit[k])) {
        kept.push_back(c);
        hits.emplace_back(c, hit);
      }
    }
    cover = BoxCover(refined.frame(), refined.resolution(), std::move(kept));
    if (cover.resolution() < min_resolution) continue;

    auto pieces = connected_clusters(cover);
    const auto isolated = isolated_clusters(pieces);
    auto hit_of = [&](Cell c) {
      return std::lower_bound(hits.begin(), hits.end(), HitCell{c, -3})->second;
    };
    std::vector<Cell> rest;
    for (std::size_t q = 0; q < pieces.size(); ++q) {
      int image = isolated[q] ? -1 : -2;
      for (const Cell& c : pieces[q].cells()) {
        if (image == -2) break;
        const int h = hit_of(c);
        image = (h < 0 || (image >= 0 && h != image)) ? -2 : h;
      }
      bool ok = image >= 0 && has_witness(k, pieces[q]);
      std::vector<int> owned;
      for (int c = 0; ok && c < static_cast<int>(critical.size()); ++c) {
        const Box& enclosure = tree_.critical_orbits_[critical[c]][0];
        if (!pieces[q].meets(enclosure)) continue;
        owned.push_back(critical[c]);
        for (std::size_t r = 0; r < pieces.size(); ++r) {
          if (r != q && pieces[r].meets(enclosure)) ok = false;
        }
      }
      if (ok) {
        frozen.push_back({parent, image, std::move(pieces[q]), std::move(owned)});
      } else {
        rest.insert(rest.end(), pieces[q].cells().begin(), pieces[q].cells().end());
      }
    }
    if (rest.empty()) return frozen;
    std::sort(rest.begin(), rest.end());
    cover = BoxCover(cover.frame(), cover.resolution(), std::move(rest));
  }
  std::ostringstream os;
  os << "level " << k << " parent " << parent << ": not certified between resolutions " << start
     << " and " << cover.resolution();
  throw Error(ErrorKind::kResolutionExceeded, os.str());
}

void TreeBuilder::build_level(int k) {
  const auto& prev_nodes = tree_.graph_.levels[k - 1];
  const int n_parents = static_cast<int>(prev_nodes.size());
  const int d = tree_.graph_.degree;

  targets_by_container_.clear();
  for (int v = 0; v < n_parents; ++v) targets_by_container_[prev_nodes[v].container].push_back(v);

  std::vector<std::vector<Cluster>> results(n_parents);
  std::vector<int> min_resolution(n_parents, 0);
  std::vector<bool> pending(n_parents, true);
  for (int round = 0;; ++round) {
    for (int p = 0; p < n_parents; ++p) {
      if (pending[p]) results[p] = process_parent(k, p, min_resolution[p]);
      pending[p] = false;
    }
    // Degree sum over preimages of every V must be exactly d.
    std::vector<int> degree_into(n_parents, 0);
    for (const auto& r : results) {
      for (const auto& cl : r) {
        int mult = 0;
        for (int c : cl.critical) mult += tree_.map_.critical_points()[c].multiplicity;
        degree_into[cl.image] += 1 + mult;
      }
    }
    std::vector<bool> bad(n_parents, false);
    bool any_bad = false;
    for (int v = 0; v < n_parents; ++v) {
      if (degree_into[v] > d) {
        throw Error(ErrorKind::kInconsistentTree,
                    "level " + std::to_string(k) + ": degree over component exceeds d");
      }
      if (degree_into[v] < d) bad[v] = any_bad = true;
    }
    if (!any_bad) break;
    if (round >= tree_.policy_.max_refine_steps) {
      throw Error(ErrorKind::kResolutionExceeded,
                  "level " + std::to_string(k) + ": components could not be separated");
    }
    for (int p = 0; p < n_parents; ++p) {
      for (const auto& cl : results[p]) {
        if (bad[cl.image]) {
          pending[p] = true;
          min_resolution[p] = std::max(min_resolution[p], cl.cover.resolution() + 1);
        }
      }
    }
  }

  std::vector<Cluster> all;
  std::size_t boxes = 0;
  for (auto& r : results) {
    for (auto& cl : r) {
      boxes += cl.cover.size();
      all.push_back(std::move(cl));
    }
  }
  if (boxes > tree_.policy_.max_boxes_per_level) {
    throw Error(ErrorKind::kBudgetExceeded, "level " + std::to_string(k) + " needs " +
                                                std::to_string(boxes) + " boxes");
  }
  std::sort(all.begin(), all.end(), [](const Cluster& a, const Cluster& b) {
    return compare_position(a.cover, b.cover) < 0;
  });

  // Each critical point certified in the level set must land in one component.
  std::vector<int> owners(tree_.critical_orbits_.size(), 0);
  for (const auto& cl : all) {
    for (int c : cl.critical) ++owners[c];
  }
  for (int c = 0; c < static_cast<int>(owners.size()); ++c) {
    const bool inside = critical_membership(c, k) == Membership::kInside;
    if (owners[c] != (inside ? 1 : 0)) {
      throw Error(ErrorKind::kUndecided,
                  "critical point " + std::to_string(c) + " not assigned to a unique component");
    }
  }

  std::vector<Node> nodes;
  std::vector<Piece> pieces;
  nodes.reserve(all.size());
  pieces.reserve(all.size());
  for (auto& cl : all) {
    Node n;
    n.container = cl.parent;
    n.image = cl.image;
    for (int c : cl.critical) n.critical_multiplicity += tree_.map_.critical_points()[c].multiplicity;
    n.local_degree = 1 + n.critical_multiplicity;
    n.cumulative_degree = n.local_degree * prev_nodes[cl.image].cumulative_degree;
    Piece piece;
    piece.bbox = cl.cover.bounding_box();
    piece.diameter_bound = piece.bbox.diameter_up();
    piece.critical_points = std::move(cl.critical);
    piece.cover = std::move(cl.cover);
    nodes.push_back(n);
    pieces.push_back(std::move(piece));
  }
  tree_.graph_.levels.push_back(std::move(nodes));
  tree_.pieces_.push_back(std::move(pieces));
}

std::vector<int> PuzzleTree::domain_critical_points() const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(critical_orbits_.size()); ++c) {
    if (level_membership(disk_, critical_orbits_[c], 1) != Membership::kOutside) out.push_back(c);
  }
  return out;
}

int PuzzleTree::reduced_critical_count() const {
  return graph_.degree - static_cast<int>(depth() >= 1 ? graph_.levels[1].size() : 1);
}

std::size_t PuzzleTree::box_count(int level) const {
  std::size_t n = 0;
  for (const auto& p : pieces_[level]) n += p.cover.size();
  return n;
}

PuzzleTree build_tree(const PolynomialMap& f, const DomainDisk& disk, int depth,
                      const BuildPolicy& policy) {
  if (depth < 0) throw Error(ErrorKind::kInvalidInput, "depth must be non-negative");
  DomainDisk current = disk;
  for (int attempt = 0;; ++attempt) {
    try {
      return TreeBuilder(f, current, policy, depth).build();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kHypothesisViolation || policy.radius_shrink <= 0.0 ||
          attempt >= policy.max_shrink_steps) {
        throw;
      }
      // Only boundary contact is repaired by shrinking U.
      BuildPolicy probe = policy;
      probe.validate = false;
      const auto tree = TreeBuilder(f, current, probe, 1).build();
      const auto& report = tree.restriction();
      if (report.compactly_contained || report.n_components < 2) throw;
      const double r = rounding::mul_down(current.radius.lo(), 1.0 - policy.radius_shrink);
      current.radius = Interval(r);
    }
  }
}

std::vector<int> locate(const PuzzleTree& tree, const Box& z, int level) {
  if (level < 0 || level > tree.depth()) {
    throw Error(ErrorKind::kInvalidInput, "level outside the built tree");
  }
  const auto orbit = orbit_enclosures(tree.map(), z, level);
  switch (level_membership(tree.disk(), orbit, level)) {
    case Membership::kOutside:
      throw Error(ErrorKind::kNotInCover, "point escapes before level " + std::to_string(level));
    case Membership::kUnknown:
      throw Error(ErrorKind::kUndecided, "membership in level " + std::to_string(level) +
                                             " cannot be certified");
    case Membership::kInside:
      break;
  }
  std::vector<int> chain{0};
  for (int j = 1; j <= level; ++j) {
    int found = -1;
    for (int w : tree.graph().children(j - 1, chain.back())) {
      const Piece& p = tree.piece(j, w);
      if (!p.bbox.intersects(z) || !p.cover.meets(z)) continue;
      if (found >= 0) throw Error(ErrorKind::kUndecided, "point touches two components");
      found = w;
    }
    if (found < 0) throw Error(ErrorKind::kInconsistentTree, "certified point outside every cover");
    chain.push_back(found);
  }
  return chain;
}

CantorDiagnostic cantor_diagnostic(const PuzzleTree& tree) {
  CantorDiagnostic out;
  for (int k = 0; k <= tree.depth(); ++k) {
    double m = 0.0;
    for (const auto& p : tree.pieces(k)) m = std::max(m, p.diameter_bound);
    out.max_diameter.push_back(m);
  }
  out.strictly_decreasing = true;
  for (std::size_t k = 1; k < out.max_diameter.size(); ++k) {
    if (!(out.max_diameter[k] < out.max_diameter[k - 1])) out.strictly_decreasing = false;
  }
  return out;
}

}  // namespace shiftcode
