#include "shiftcode/restriction.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "shiftcode/errors.hpp"
#include "shiftcode/orbit.hpp"
#include "shiftcode/puzzle_tree.hpp"

namespace shiftcode {

const char* to_string(CriticalStatus status) {
  switch (status) {
    case CriticalStatus::kOutsideDomain: return "outside_domain";
    case CriticalStatus::kStaysWithinHorizon: return "stays_within_horizon";
    case CriticalStatus::kEscapes: return "escapes";
    case CriticalStatus::kUndecided: return "undecided";
  }
  return "unknown";
}

namespace {

constexpr int kExtraContainmentLevels = 10;
constexpr std::size_t kContainmentBudget = 200'000;

// Refines the cells of a level-1 cover that are not yet certified inside U.
bool certify_contained(const PolynomialMap& f, const DomainDisk& disk, const BoxCover& cover) {
  std::vector<Cell> open;
  for (const Cell& c : cover.cells()) {
    if (!disk.contains(cover.cell_box(c))) open.push_back(c);
  }
  BoxCover pending(cover.frame(), cover.resolution(), std::move(open));
  for (int extra = 0; extra < kExtraContainmentLevels && !pending.empty(); ++extra) {
    if (pending.size() * 4 > kContainmentBudget) return false;
    const BoxCover refined = refine(pending, kContainmentBudget);
    std::vector<Cell> still;
    for (const Cell& c : refined.cells()) {
      const Box b = refined.cell_box(c);
      if (!disk.possibly_meets(b) || !disk.possibly_meets(f.eval(b))) continue;
      if (!disk.contains(b)) still.push_back(c);
    }
    pending = BoxCover(refined.frame(), refined.resolution(), std::move(still));
  }
  return pending.empty();
}

// A boundary point z of U with f(z) in the closed disk proves that the
// closure of f^-1(U) touches the boundary of U.
bool certify_boundary_contact(const PolynomialMap& f, const DomainDisk& disk) {
  constexpr int kSamples = 512;
  const Interval r2 = sqr(disk.radius);
  auto touches = [&](const Box& z) { return f.eval(z).squared_distance_to(disk.center).hi() <= r2.lo(); };
  const Interval r = disk.radius;
  const Interval zero(0.0);
  for (const Box& dir : {Box{r, zero}, Box{-r, zero}, Box{zero, r}, Box{zero, -r}}) {
    if (touches(disk.center + dir)) return true;
  }
  for (int k = 0; k < kSamples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / kSamples;
    const double c = std::cos(theta), s = std::sin(theta);
    // libm cos/sin are within one ulp; two ulps enclose the exact values.
    const Interval ci(rounding::next_down(rounding::next_down(c)), rounding::next_up(rounding::next_up(c)));
    const Interval si(rounding::next_down(rounding::next_down(s)), rounding::next_up(rounding::next_up(s)));
    if (touches(disk.center + Box{r * ci, r * si})) return true;
  }
  return false;
}

}  // namespace

RestrictionReport validate_restriction(const PolynomialMap& f, const DomainDisk& disk,
                                       const PuzzleTree& level1, int horizon) {
  if (level1.depth() < 1) throw Error(ErrorKind::kInvalidInput, "restriction check needs level 1");
  RestrictionReport report;
  const auto& nodes = level1.graph().levels[1];
  report.n_components = static_cast<int>(nodes.size());
  for (const auto& n : nodes) report.branch_degrees.push_back(n.local_degree);

  report.compactly_contained = true;
  for (const auto& p : level1.pieces(1)) {
    if (!certify_contained(f, disk, p.cover)) {
      report.compactly_contained = false;
      break;
    }
  }
  if (!report.compactly_contained) report.boundary_contact = certify_boundary_contact(f, disk);

  const auto& critical = f.critical_points();
  for (int c = 0; c < static_cast<int>(critical.size()); ++c) {
    CriticalReport cr;
    cr.index = c;
    const auto orbit = orbit_enclosures(f, critical[c].enclosure, horizon + 1);
    const Membership domain = level_membership(disk, orbit, 1);
    if (domain == Membership::kOutside) {
      cr.status = CriticalStatus::kOutsideDomain;
    } else if (domain == Membership::kUnknown) {
      cr.status = CriticalStatus::kUndecided;
    } else {
      cr.status = CriticalStatus::kStaysWithinHorizon;
      for (int j = 0; j <= horizon + 1; ++j) {
        if (disk.excludes(orbit[j])) {
          cr.status = CriticalStatus::kEscapes;
          cr.escape_step = j;
          break;
        }
        if (!disk.contains(orbit[j])) {
          cr.status = CriticalStatus::kUndecided;
          break;
        }
      }
    }
    for (int j = 1; j <= horizon && j < static_cast<int>(orbit.size()); ++j) {
      if (critical[c].exact && orbit[j] == orbit[0]) cr.periodic = true;
      if (orbit[j].intersects(orbit[0])) cr.may_return = true;
    }
    cr.non_periodic_certified = critical[c].exact && enters_cycle_avoiding_seed(orbit);
    if (cr.status == CriticalStatus::kOutsideDomain) cr.periodic = false;
    report.critical.push_back(cr);
  }

  const int d = f.degree();
  const int degree_sum = std::accumulate(report.branch_degrees.begin(), report.branch_degrees.end(), 0);
  if (report.n_components < 2) {
    report.failures.push_back("U' has " + std::to_string(report.n_components) +
                              " component(s); a Cantor Julia set needs N >= 2");
  }
  if (degree_sum != d) report.failures.push_back("branch degrees do not sum to d");
  if (!report.compactly_contained) {
    report.failures.push_back(report.boundary_contact
                                  ? "U' touches the boundary of U"
                                  : "U' could not be certified compactly inside U");
  }
  for (const auto& cr : report.critical) {
    const std::string name = "critical point " + std::to_string(cr.index);
    if (cr.status == CriticalStatus::kEscapes) {
      report.failures.push_back(name + " lies in U' but escapes at step " +
                                std::to_string(cr.escape_step));
    } else if (cr.status == CriticalStatus::kUndecided) {
      report.warnings.push_back(name + ": orbit undecided within horizon");
    } else if (cr.status == CriticalStatus::kStaysWithinHorizon && !cr.periodic && cr.may_return) {
      report.warnings.push_back(name + ": periodicity undecided within horizon");
    }
    if (cr.periodic) {
      report.periodic_critical = true;
      report.failures.push_back(name + " is periodic");
    }
  }
  report.hypothesis_ok = report.failures.empty();
  return report;
}

}  // namespace shiftcode
