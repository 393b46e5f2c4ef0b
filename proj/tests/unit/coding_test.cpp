#include "shiftcode/coding.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "shiftcode/errors.hpp"

namespace shiftcode {
namespace {

// Degree 3, level 1 = (A: degree 1, B: degree 2 with the critical point).
// Level 2: A has one child over each of A and B; B has a single degree-2
// child over A (critical) and two degree-1 children over B.
ComponentGraph small_cubic_graph() {
  ComponentGraph g;
  g.degree = 3;
  g.levels.push_back({Node{}});
  g.levels.push_back({Node{0, 0, 1, 1, 0}, Node{0, 0, 2, 2, 1}});
  g.levels.push_back({Node{0, 0, 1, 1, 0}, Node{0, 1, 1, 2, 0}, Node{1, 0, 2, 2, 1},
                      Node{1, 1, 1, 2, 0}, Node{1, 1, 1, 2, 0}});
  return g;
}

std::vector<std::string> words_of(const FiberTable& t, int index) {
  std::vector<std::string> out;
  for (const auto& w : t.words[index]) out.push_back(w.to_string());
  return out;
}

TEST(CylinderWord, ParseShiftPrefix) {
  const CylinderWord w = CylinderWord::parse("0121");
  EXPECT_EQ(w.length(), 4);
  EXPECT_EQ(w.shifted().to_string(), "121");
  EXPECT_EQ(w.prefix(2).to_string(), "01");
  EXPECT_EQ(CylinderWord::parse("").length(), 0);
  EXPECT_EQ(CylinderWord({0, 11, 3}).to_string(12), "0.11.3");
  EXPECT_THROW(CylinderWord::parse("0a"), Error);
}

TEST(SymbolSets, BitHelpers) {
  const SymbolSet s = symbol_bit(1) | symbol_bit(4);
  EXPECT_EQ(symbol_count(s), 2);
  EXPECT_EQ(symbols_of(s), (std::vector<int>{1, 4}));
  EXPECT_EQ(full_alphabet(3), SymbolSet{7});
  EXPECT_EQ(full_alphabet(64), ~SymbolSet{0});
}

TEST(AssignSymbols, ConsecutiveBlocksAndRuns) {
  const ComponentGraph g = small_cubic_graph();
  ASSERT_TRUE(check_structure(g).ok());
  const SymbolAssignment s = assign_symbols(g);
  EXPECT_EQ(s.symbols(0, 0), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(s.symbols(1, 0), std::vector<int>{0});
  EXPECT_EQ(s.symbols(1, 1), (std::vector<int>{1, 2}));
  EXPECT_EQ(s.symbols(2, 0), std::vector<int>{0});
  EXPECT_EQ(s.symbols(2, 1), std::vector<int>{0});
  EXPECT_EQ(s.symbols(2, 2), (std::vector<int>{1, 2}));
  EXPECT_EQ(s.symbols(2, 3), std::vector<int>{1});
  EXPECT_EQ(s.symbols(2, 4), std::vector<int>{2});
  EXPECT_TRUE(check_assignment(s, g).empty());
}

TEST(Fibers, ProductOfSymbolsAndImageFiber) {
  const ComponentGraph g = small_cubic_graph();
  const SymbolAssignment s = assign_symbols(g);
  const FiberTable t = fibers(s, g, 2);
  EXPECT_EQ(words_of(t, 0), std::vector<std::string>{"00"});
  EXPECT_EQ(words_of(t, 1), (std::vector<std::string>{"01", "02"}));
  EXPECT_EQ(words_of(t, 2), (std::vector<std::string>{"10", "20"}));
  EXPECT_EQ(words_of(t, 3), (std::vector<std::string>{"11", "12"}));
  EXPECT_EQ(words_of(t, 4), (std::vector<std::string>{"21", "22"}));
  EXPECT_EQ(t.counts(), (std::vector<std::int64_t>{1, 2, 2, 2, 2}));
}

TEST(CylinderMap, CodesEveryWord) {
  const ComponentGraph g = small_cubic_graph();
  const SymbolAssignment s = assign_symbols(g);
  const CylinderMap c(s, g);
  EXPECT_EQ(c.component(CylinderWord::parse("")), 0);
  EXPECT_EQ(c.component(CylinderWord::parse("2")), 1);
  EXPECT_EQ(c.component(CylinderWord::parse("20")), 2);
  EXPECT_EQ(c.component(CylinderWord::parse("12")), 3);
  EXPECT_EQ(cylinder_component(s, g, CylinderWord::parse("01")), 1);
}

TEST(Verify, AllChecksPassOnAdmissibleTree) {
  const ComponentGraph g = small_cubic_graph();
  const auto report = verify_semiconjugacy(assign_symbols(g), g, 2);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.checks.size(), 5u);
  EXPECT_EQ(report.cylinders, 9u);
}

TEST(Verify, MutatedSymbolIsDetected) {
  const ComponentGraph g = small_cubic_graph();
  SymbolAssignment s = assign_symbols(g);
  s.replace_symbol(2, 3, 1, 2);  // S = {2} now collides with its sibling
  EXPECT_FALSE(check_assignment(s, g).empty());
  const auto report = verify_semiconjugacy(s, g, 2);
  EXPECT_FALSE(report.passed());
  EXPECT_LT(report.passed_count(), 5);
}

TEST(Verify, QuadraticTreeIsConjugateToTheFullShift) {
  const auto& g = testing::quadratic_tree().graph();
  const SymbolAssignment s = assign_symbols(g);
  const auto report = verify_semiconjugacy(s, g, 8);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.cylinders, 256u);
  for (auto n : fibers(s, g, 8).counts()) EXPECT_EQ(n, 1);
}

TEST(Verify, CubicFibersMatchCumulativeDegrees) {
  const auto& g = testing::cubic_tree().graph();
  const SymbolAssignment s = assign_symbols(g);
  const int k = g.depth();
  EXPECT_TRUE(verify_semiconjugacy(s, g, k).passed());
  const auto counts = fibers(s, g, k).counts();
  for (std::size_t i = 0; i < counts.size(); ++i) EXPECT_EQ(counts[i], g.levels[k][i].cumulative_degree);
}

TEST(AssignSymbols, Deterministic) {
  const auto& g = testing::cubic_tree().graph();
  EXPECT_EQ(assign_symbols(g), assign_symbols(g));
}

}  // namespace
}  // namespace shiftcode
