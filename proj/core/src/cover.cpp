#include "shiftcode/cover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "shiftcode/errors.hpp"
#include "shiftcode/polynomial_map.hpp"

namespace shiftcode {

namespace {

std::int64_t clamp_index(double t, std::int64_t lo, std::int64_t hi) {
  if (!(t > static_cast<double>(lo))) return lo;
  if (!(t < static_cast<double>(hi))) return hi;
  return static_cast<std::int64_t>(t);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Extent {
  std::int64_t i_lo, j_lo, i_hi, j_hi;  // ideal hull in cell units, upper exclusive
};

Extent extent(const BoxCover& c) {
  Extent e{INT64_MAX, INT64_MAX, INT64_MIN, INT64_MIN};
  for (const Cell& cell : c.cells()) {
    e.i_lo = std::min(e.i_lo, cell.i);
    e.j_lo = std::min(e.j_lo, cell.j);
    e.i_hi = std::max(e.i_hi, cell.i + 1);
    e.j_hi = std::max(e.j_hi, cell.j + 1);
  }
  return e;
}

}  // namespace

Frame Frame::enclosing(const DomainDisk& disk) {
  using namespace rounding;
  const double r = disk.radius.hi();
  const double re_lo = sub_down(disk.center.re.lo(), r);
  const double im_lo = sub_down(disk.center.im.lo(), r);
  const double side = std::max(sub_up(add_up(disk.center.re.hi(), r), re_lo),
                               sub_up(add_up(disk.center.im.hi(), r), im_lo));
  return {re_lo, im_lo, side};
}

Box Frame::cell_box(int r, Cell c) const {
  using namespace rounding;
  const double h = cell_side(r);
  const double i = static_cast<double>(c.i), j = static_cast<double>(c.j);
  return Box::from_bounds(add_down(re_lo, mul_down(i, h)), add_up(re_lo, mul_up(i + 1.0, h)),
                          add_down(im_lo, mul_down(j, h)), add_up(im_lo, mul_up(j + 1.0, h)));
}

Box Frame::cell_inner_box(int r, Cell c) const {
  using namespace rounding;
  const double h = cell_side(r);
  const double i = static_cast<double>(c.i), j = static_cast<double>(c.j);
  return Box::from_bounds(add_up(re_lo, mul_up(i, h)), add_down(re_lo, mul_down(i + 1.0, h)),
                          add_up(im_lo, mul_up(j, h)), add_down(im_lo, mul_down(j + 1.0, h)));
}

Frame::IndexRange Frame::index_range(int r, const Box& b) const {
  using namespace rounding;
  const double h = cell_side(r);
  const std::int64_t n = std::int64_t{1} << r;
  auto lower = [&](double v, double origin) {
    const double t = div_down(sub_down(v, origin), h);
    return clamp_index(std::ceil(t) - 1.0, 0, n);
  };
  auto upper = [&](double v, double origin) {
    const double t = div_up(sub_up(v, origin), h);
    return clamp_index(std::floor(t), -1, n - 1);
  };
  return {lower(b.re_lo(), re_lo), upper(b.re_hi(), re_lo), lower(b.im_lo(), im_lo),
          upper(b.im_hi(), im_lo)};
}

BoxCover::BoxCover(Frame frame, int resolution, std::vector<Cell> cells)
    : frame_(frame), resolution_(resolution), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool BoxCover::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

bool BoxCover::meets(const Box& b) const {
  const auto range = frame_.index_range(resolution_, b);
  if (range.empty()) return false;
  if (static_cast<std::size_t>(range.count()) <= cells_.size()) {
    for (std::int64_t i = range.i_lo; i <= range.i_hi; ++i) {
      auto it = std::lower_bound(cells_.begin(), cells_.end(), Cell{i, range.j_lo});
      if (it != cells_.end() && it->i == i && it->j <= range.j_hi) return true;
    }
    return false;
  }
  for (const Cell& c : cells_) {
    if (c.i >= range.i_lo && c.i <= range.i_hi && c.j >= range.j_lo && c.j <= range.j_hi) return true;
  }
  return false;
}

Box BoxCover::bounding_box() const {
  const Extent e = extent(*this);
  const Box lo = frame_.cell_box(resolution_, {e.i_lo, e.j_lo});
  const Box hi = frame_.cell_box(resolution_, {e.i_hi - 1, e.j_hi - 1});
  return hull(lo, hi);
}

BoxCover disk_cover(const Frame& frame, int r, const DomainDisk& disk) {
  std::vector<Cell> cells;
  const std::int64_t n = std::int64_t{1} << r;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      if (disk.possibly_meets(frame.cell_box(r, {i, j}))) cells.push_back({i, j});
    }
  }
  return {frame, r, std::move(cells)};
}

BoxCover refine(const BoxCover& cover, std::size_t max_boxes) {
  if (cover.size() > max_boxes / 4) {
    throw Error(ErrorKind::kBudgetExceeded,
                "refinement to " + std::to_string(cover.size() * 4) + " boxes exceeds cap " +
                    std::to_string(max_boxes));
  }
  std::vector<Cell> children;
  children.reserve(cover.size() * 4);
  for (const Cell& c : cover.cells()) {
    for (std::int64_t di : {0, 1}) {
      for (std::int64_t dj : {0, 1}) children.push_back({2 * c.i + di, 2 * c.j + dj});
    }
  }
  return {cover.frame(), cover.resolution() + 1, std::move(children)};
}

std::vector<BoxCover> connected_clusters(const BoxCover& cover) {
  const auto& cells = cover.cells();
  UnionFind uf(cells.size());
  auto index_of = [&](Cell c) -> std::ptrdiff_t {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    return (it != cells.end() && *it == c) ? it - cells.begin() : -1;
  };
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell c = cells[k];
    for (Cell n : {Cell{c.i + 1, c.j}, Cell{c.i, c.j + 1}}) {
      const auto m = index_of(n);
      if (m >= 0) uf.unite(k, static_cast<std::size_t>(m));
    }
  }
  std::unordered_map<std::size_t, std::size_t> root_to_cluster;
  std::vector<std::vector<Cell>> groups;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const std::size_t root = uf.find(k);
    auto [it, inserted] = root_to_cluster.try_emplace(root, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(cells[k]);
  }
  std::vector<BoxCover> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.emplace_back(cover.frame(), cover.resolution(), std::move(g));
  std::sort(out.begin(), out.end(),
            [](const BoxCover& a, const BoxCover& b) { return compare_position(a, b) < 0; });
  return out;
}

std::vector<bool> isolated_clusters(const std::vector<BoxCover>& clusters) {
  std::vector<std::pair<Cell, std::size_t>> labelled;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    for (const Cell& c : clusters[k].cells()) labelled.emplace_back(c, k);
  }
  std::sort(labelled.begin(), labelled.end());
  auto label_of = [&](Cell c) -> std::ptrdiff_t {
    auto it = std::lower_bound(labelled.begin(), labelled.end(), std::pair<Cell, std::size_t>{c, 0});
    return (it != labelled.end() && it->first == c) ? static_cast<std::ptrdiff_t>(it->second) : -1;
  };
  std::vector<bool> isolated(clusters.size(), true);
  for (const auto& [c, k] : labelled) {
    for (std::int64_t di = -1; di <= 1; ++di) {
      for (std::int64_t dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        const auto other = label_of({c.i + di, c.j + dj});
        if (other >= 0 && static_cast<std::size_t>(other) != k) {
          isolated[k] = false;
          isolated[other] = false;
        }
      }
    }
  }
  return isolated;
}

bool clusters_separated(const std::vector<BoxCover>& clusters) {
  const auto isolated = isolated_clusters(clusters);
  return std::all_of(isolated.begin(), isolated.end(), [](bool b) { return b; });
}

std::strong_ordering compare_position(const BoxCover& a, const BoxCover& b) {
  const Extent ea = extent(a), eb = extent(b);
  // Bring both to the finer resolution; indices stay below 2^62 / 2^r.
  const int r = std::max(a.resolution(), b.resolution());
  // Upper hull edges sit one cell past the last index.
  auto scale = [r](std::int64_t v, int res) { return static_cast<__int128>(v) << (r - res); };
  const __int128 ka[4] = {scale(ea.i_lo, a.resolution()), scale(ea.j_lo, a.resolution()),
                          scale(ea.i_hi + 1, a.resolution()), scale(ea.j_hi + 1, a.resolution())};
  const __int128 kb[4] = {scale(eb.i_lo, b.resolution()), scale(eb.j_lo, b.resolution()),
                          scale(eb.i_hi + 1, b.resolution()), scale(eb.j_hi + 1, b.resolution())};
  for (int k = 0; k < 4; ++k) {
    if (ka[k] < kb[k]) return std::strong_ordering::less;
    if (ka[k] > kb[k]) return std::strong_ordering::greater;
  }
  if (a.cells() < b.cells()) return std::strong_ordering::less;
  if (b.cells() < a.cells()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace shiftcode
