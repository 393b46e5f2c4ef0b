#include "shiftcode/cover.hpp"

#include <gtest/gtest.h>

#include "shiftcode/errors.hpp"
#include "shiftcode/polynomial_map.hpp"

namespace shiftcode {
namespace {

const Frame kUnit{0.0, 0.0, 8.0};

BoxCover cover_of(std::vector<Cell> cells) { return BoxCover(kUnit, 3, std::move(cells)); }

TEST(BoxCover, CellsAreSortedAndUnique) {
  const BoxCover c = cover_of({{2, 1}, {0, 0}, {2, 1}});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(c.contains({0, 0}));
  EXPECT_TRUE(c.contains({2, 1}));
  EXPECT_FALSE(c.contains({1, 1}));
}

TEST(BoxCover, CellBoxesTileTheFrame) {
  const BoxCover c = cover_of({{3, 5}});
  const Box b = c.cell_box({3, 5});
  EXPECT_EQ(b, Box::from_bounds(3.0, 4.0, 5.0, 6.0));
  EXPECT_TRUE(c.meets(Box::around({3.5, 5.5}, 0.1)));
  EXPECT_FALSE(c.meets(Box::around({6.5, 6.5}, 0.1)));
}

TEST(Refine, SplitsEveryCellIntoFour) {
  const BoxCover c = refine(cover_of({{0, 0}, {1, 0}}));
  EXPECT_EQ(c.resolution(), 4);
  EXPECT_EQ(c.size(), 8u);
  EXPECT_TRUE(c.contains({3, 1}));
  EXPECT_THROW(refine(c, 10), Error);
}

TEST(ConnectedClusters, EdgeAdjacencyOnly) {
  // Two cells sharing a corner are separate clusters but not isolated.
  const auto clusters = connected_clusters(cover_of({{0, 0}, {1, 1}, {5, 5}, {5, 6}}));
  ASSERT_EQ(clusters.size(), 3u);
  EXPECT_EQ(clusters[0].size(), 1u);
  EXPECT_EQ(clusters[2].size(), 2u);
  const auto isolated = isolated_clusters(clusters);
  EXPECT_EQ(isolated, (std::vector<bool>{false, false, true}));
  EXPECT_FALSE(clusters_separated(clusters));
}

TEST(ConnectedClusters, OrderedByPosition) {
  const auto clusters = connected_clusters(cover_of({{6, 0}, {0, 6}, {3, 3}}));
  ASSERT_EQ(clusters.size(), 3u);
  EXPECT_TRUE(clusters[0].contains({0, 6}));
  EXPECT_TRUE(clusters[1].contains({3, 3}));
  EXPECT_TRUE(clusters[2].contains({6, 0}));
  EXPECT_TRUE(clusters_separated(clusters));
  EXPECT_EQ(compare_position(clusters[0], clusters[1]), std::strong_ordering::less);
}

TEST(ComparePosition, ConsistentAcrossResolutions) {
  // Same lower corner; the finer cluster ends halfway through the coarse cell.
  const BoxCover coarse = cover_of({{1, 1}});
  const BoxCover fine(kUnit, 4, {{2, 2}});
  EXPECT_EQ(compare_position(fine, coarse), std::strong_ordering::less);
  EXPECT_EQ(compare_position(coarse, fine), std::strong_ordering::greater);
  EXPECT_EQ(compare_position(coarse, coarse), std::strong_ordering::equal);
}

TEST(DiskCover, CoversTheDisk) {
  const DomainDisk u = DomainDisk::centered(0, 0, 4);
  const Frame frame = Frame::enclosing(u);
  const BoxCover c = disk_cover(frame, 4, u);
  EXPECT_GT(c.size(), 0u);
  EXPECT_LE(c.size(), 256u);
  EXPECT_TRUE(c.meets(Box::point(3.9, 0.0)));
  EXPECT_TRUE(c.meets(Box::point(0.0, -3.9)));
  EXPECT_TRUE(frame.cell_box(0, {0, 0}).contains(u.bounding_box()));
}

TEST(Frame, IndexRangeCoversBox) {
  const auto r = kUnit.index_range(3, Box::from_bounds(1.5, 2.5, 0.0, 0.5));
  EXPECT_EQ(r.i_lo, 1);
  EXPECT_EQ(r.i_hi, 2);
  EXPECT_EQ(r.j_lo, 0);
  EXPECT_FALSE(r.empty());
}

}  // namespace
}  // namespace shiftcode
