#include "shiftcode/oracle.hpp"

#include <gtest/gtest.h>

#include "shiftcode/errors.hpp"

namespace shiftcode {
namespace {

TEST(Generate, DeterministicInSeed) {
  EXPECT_EQ(generate(42, 3, 5).levels, generate(42, 3, 5).levels);
  EXPECT_NE(generate(42, 4, 5).levels, generate(43, 4, 5).levels);
}

TEST(Generate, TreesAreAdmissible) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    for (int d : {2, 3, 4, 5}) {
      const AbstractTree t = generate(seed, d, 4);
      const auto report = check_structure(t);
      ASSERT_TRUE(report.ok()) << "seed " << seed << " d " << d << ": " << report.violations.front();
      EXPECT_GE(t.size(1), 2u);
    }
  }
}

TEST(Generate, FixedLevelOneComposition) {
  SplitPolicy policy;
  policy.level1 = {1, 1};
  const AbstractTree t = generate(9, 2, 6, policy);
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(t.size(k), std::size_t{1} << k);
  }
  const SymbolAssignment s = assign_symbols(t);
  for (auto n : fibers(s, t, 6).counts()) EXPECT_EQ(n, 1);
}

TEST(Generate, NeverSplittingKeepsDegreesWhole) {
  SplitPolicy policy;
  policy.cut_probability = 0.0;
  policy.level1 = {1, 3};
  const AbstractTree t = generate(5, 4, 3, policy);
  ASSERT_TRUE(check_structure(t).ok());
  // Every parent has exactly one child over each V below its image.
  for (int k = 1; k < 3; ++k) {
    for (std::size_t p = 0; p < t.size(k); ++p) {
      const int image = t.levels[k][p].image;
      EXPECT_EQ(t.children(k, static_cast<int>(p)).size(), t.children(k - 1, image).size());
    }
  }
}

TEST(Generate, InvalidArguments) {
  SplitPolicy policy;
  policy.level1 = {3};
  EXPECT_THROW(generate(1, 3, 2, policy), Error);
  EXPECT_THROW(generate(1, 1, 2), Error);
}

TEST(BruteForce, AgreesWithFibersOverManySeeds) {
  for (std::uint64_t seed = 100; seed < 300; ++seed) {
    const int d = 2 + static_cast<int>(seed % 3);
    const AbstractTree t = generate(seed, d, 5);
    const SymbolAssignment s = assign_symbols(t);
    for (int k = 1; k <= 5; ++k) {
      ASSERT_EQ(fibers(s, t, k).counts(), brute_force_fibers(t, s, k)) << "seed " << seed << " k " << k;
    }
  }
}

TEST(BruteForce, FiberCountsAreCumulativeDegrees) {
  const AbstractTree t = generate(7, 4, 4);
  const SymbolAssignment s = assign_symbols(t);
  const auto counts = brute_force_fibers(t, s, 4);
  for (std::size_t i = 0; i < counts.size(); ++i) EXPECT_EQ(counts[i], t.levels[4][i].cumulative_degree);
}

TEST(BruteForce, BrokenAssignmentIsReported) {
  const AbstractTree t = generate(3, 3, 3);
  SymbolAssignment s = assign_symbols(t);
  const auto first = s.symbols(1, 0).front();
  const auto other = s.symbols(1, 1).front();
  s.replace_symbol(1, 0, first, other);
  EXPECT_THROW(brute_force_fibers(t, s, 2), Error);
}

}  // namespace
}  // namespace shiftcode
