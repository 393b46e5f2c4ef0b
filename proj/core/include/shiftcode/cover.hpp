#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "shiftcode/box.hpp"

namespace shiftcode {

struct DomainDisk;

/// Grid index of a dyadic cell.
struct Cell {
  std::int64_t i = 0;  // real direction
  std::int64_t j = 0;  // imaginary direction
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Square base frame [re_lo, re_lo + side] x [im_lo, im_lo + side].  At
/// resolution r it is split into 2^r x 2^r closed cells.
struct Frame {
  double re_lo = 0.0;
  double im_lo = 0.0;
  double side = 1.0;

  static Frame enclosing(const DomainDisk& disk);

  double cell_side(int r) const { return std::ldexp(side, -r); }
  /// Outward-rounded enclosure of the cell.
  Box cell_box(int r, Cell c) const;
  /// Box contained in the cell (used to place witness points strictly inside).
  Box cell_inner_box(int r, Cell c) const;

  struct IndexRange {
    std::int64_t i_lo, i_hi, j_lo, j_hi;
    bool empty() const { return i_lo > i_hi || j_lo > j_hi; }
    std::int64_t count() const { return empty() ? 0 : (i_hi - i_lo + 1) * (j_hi - j_lo + 1); }
  };
  /// Every cell at resolution r whose closed square may meet b lies in
  /// the returned range (clamped to the frame).
  IndexRange index_range(int r, const Box& b) const;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Set of cells at one dyadic resolution: a certified outer cover of some
/// planar set.  Cells are kept sorted and unique.
class BoxCover {
 public:
  BoxCover() = default;
  BoxCover(Frame frame, int resolution, std::vector<Cell> cells);

  const Frame& frame() const { return frame_; }
  int resolution() const { return resolution_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  bool contains(Cell c) const;
  Box cell_box(Cell c) const { return frame_.cell_box(resolution_, c); }
  /// Some cell's closed square may meet b.
  bool meets(const Box& b) const;
  /// Outward-rounded hull of all cells.
  Box bounding_box() const;

  friend bool operator==(const BoxCover&, const BoxCover&) = default;

 private:
  Frame frame_{};
  int resolution_ = 0;
  std::vector<Cell> cells_;
};

/// Cover of the whole frame at resolution r restricted to cells that may
/// meet the disk.
BoxCover disk_cover(const Frame& frame, int r, const DomainDisk& disk);

/// Splits every cell into its four children at resolution r + 1.  Throws
/// Error(kBudgetExceeded) if the result would exceed max_boxes.
BoxCover refine(const BoxCover& cover, std::size_t max_boxes = 1'000'000);

/// Maximal edge-adjacent clusters, ordered by the (min re, min im) corner of
/// their bounding boxes, ties broken by the opposite corner.
std::vector<BoxCover> connected_clusters(const BoxCover& cover);

/// Per cluster: no cell touches (even at a corner) a cell of another
/// cluster.  All clusters must share frame and resolution.
std::vector<bool> isolated_clusters(const std::vector<BoxCover>& clusters);

/// No cell of one cluster touches (even at a corner) a cell of another.
/// All clusters must share frame and resolution.
bool clusters_separated(const std::vector<BoxCover>& clusters);

/// Total order on cluster position across resolutions: (min re, min im,
/// max re, max im) of the ideal grid hull.
std::strong_ordering compare_position(const BoxCover& a, const BoxCover& b);

}  // namespace shiftcode
