#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "mcc/validate.hpp"
#include "test_support.hpp"

namespace mcc {
namespace {

using testing::golden;
using testing::grid;

bool has(const ValidationReport& r, Condition c) {
  for (const auto& v : r.violations)
    if (v.condition == c) return true;
  return false;
}

TEST(Validate, Part_12_2_4_IsTwoCyclicFourRegular) {
  const ValidationReport r = validate(golden("K12_k2_L4_part1"));
  EXPECT_TRUE(r.is_pda);
  EXPECT_EQ(r.rows, 12u);
  EXPECT_EQ(r.cols, 6u);
  EXPECT_EQ(r.Z, 8u);
  EXPECT_EQ(r.S, 6u);
  EXPECT_EQ(r.regular_g, 4u);
  EXPECT_EQ(r.cyclic_t, 2u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Validate, AllStarsFailsC2) {
  const ValidationReport r = validate(grid({{-1, -1}, {-1, -1}}));
  EXPECT_FALSE(r.is_pda);
  EXPECT_EQ(r.S, 0u);
  ASSERT_TRUE(has(r, Condition::C2));
  EXPECT_FALSE(r.regular_g);
  EXPECT_FALSE(r.cyclic_t);
}

TEST(Validate, SameRowRepeatIsC3a) {
  const ValidationReport r = validate(grid({{0, 0}, {-1, -1}}));
  EXPECT_FALSE(r.is_pda);
  // Both columns star row 1, which no shift in [1, F) maps onto itself.
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].condition, Condition::C3a);
  EXPECT_EQ(r.violations[0].symbol, 0u);
  EXPECT_EQ(r.violations[0].cells, (std::vector<Cell>{{0, 0}, {0, 1}}));
  EXPECT_EQ(r.violations[1].condition, Condition::cyclicity);
}

TEST(Validate, AntiDiagonalPair) {
  // Hand check: one star per column, symbol 0 at (0,0) and (1,1) with both
  // cross cells starred, star sets {1} -> {0} is a shift by 1 mod 2.
  const ValidationReport r = validate(grid({{0, -1}, {-1, 0}}));
  EXPECT_TRUE(r.is_pda);
  EXPECT_EQ(r.Z, 1u);
  EXPECT_EQ(r.S, 1u);
  EXPECT_EQ(r.regular_g, 2u);
  EXPECT_EQ(r.cyclic_t, 1u);
}

TEST(Validate, CrossNotStarredIsC3b) {
  const ValidationReport r = validate(grid({{0, 1}, {1, 0}}));
  EXPECT_FALSE(r.is_pda);
  EXPECT_TRUE(has(r, Condition::C3b));
  EXPECT_FALSE(has(r, Condition::C3a));
}

TEST(Validate, SymbolGapIsC2ForMissingValue) {
  const ValidationReport r = validate(grid({{0, -1}, {-1, 2}}));
  EXPECT_FALSE(r.is_pda);
  EXPECT_EQ(r.S, 2u);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].condition, Condition::C2);
  EXPECT_EQ(r.violations[0].symbol, 1u);
}

TEST(Validate, NonUniformStarsReportsEachOffendingColumn) {
  const ValidationReport r = validate(grid({{-1, -1, -1, -1}, {-1, -1, 2, 4}, {0, 1, 3, 5}}));
  EXPECT_FALSE(r.Z);
  std::vector<std::size_t> cols;
  for (const auto& v : r.violations)
    if (v.condition == Condition::C1) cols.push_back(*v.column);
  EXPECT_EQ(cols, (std::vector<std::size_t>{0, 1}));  // counts 2,2,1,1: the tie resolves to 1
}

TEST(Validate, NonConsecutiveStarsBlockCyclicity) {
  // Regular PDA whose stars are split within a column.
  const ValidationReport r = validate(grid({{-1, 0}, {0, -1}, {-1, -1}, {1, -1}, {-1, 1}}));
  ASSERT_TRUE(r.is_pda);
  EXPECT_EQ(r.regular_g, 2u);
  EXPECT_FALSE(r.cyclic_t);
  EXPECT_TRUE(has(r, Condition::cyclicity));
}

TEST(Validate, IrregularPdaHasNoG) {
  const ValidationReport r = validate(grid({{0, -1, 1}, {-1, 0, -1}}));
  EXPECT_FALSE(r.regular_g);
  EXPECT_FALSE(r.cyclic_t);
}

TEST(ValidateOracle, SingleStar) {
  const ValidationReport r = validate_oracle(grid({{-1}}));
  EXPECT_FALSE(r.is_pda);
  EXPECT_TRUE(has(r, Condition::C2));
}

TEST(ValidateOracle, Part_12_2_4_Matches) {
  const Pda p = golden("K12_k2_L4_part1");
  EXPECT_EQ(validate_oracle(p), validate(p));
}

Pda mutate(const Pda& p, std::mt19937_64& rng, Symbol max_symbol) {
  Pda m = p;
  const std::size_t i = rng() % p.rows(), j = rng() % p.cols();
  const Entry old = m(i, j);
  do {
    m(i, j) = rng() % 4 == 0 ? Entry::star() : Entry::symbol(rng() % (max_symbol + 2));
  } while (m(i, j) == old);
  return m;
}

TEST(ValidateOracle, AgreesOnMutantsOf_12_2_4) {
  const Pda base = golden("K12_k2_L4");
  std::mt19937_64 rng(2024);
  for (int n = 0; n < 100; ++n) {
    const Pda m = mutate(base, rng, 11);
    ASSERT_EQ(validate(m), validate_oracle(m)) << to_text(m);
  }
}

TEST(ValidateOracle, AgreesOnRandomSmallGrids) {
  std::mt19937_64 rng(99);
  int pdas = 0;
  for (int n = 0; n < 3000; ++n) {
    const std::size_t F = 1 + rng() % 5, K = 1 + rng() % 5;
    Pda p(F, K);
    for (std::size_t i = 0; i < F; ++i)
      for (std::size_t j = 0; j < K; ++j)
        if (rng() % 2) p(i, j) = Entry::symbol(rng() % 4);
    const ValidationReport r = validate(p);
    pdas += r.is_pda;
    ASSERT_EQ(r, validate_oracle(p)) << to_text(p);
  }
  EXPECT_GT(pdas, 0);
}

TEST(ValidateProperties, ShiftOnlyOpensALeadingGap) {
  // Symbols must cover [0, S), so a shift by b adds exactly the C2 findings
  // for 0..b-1; every other finding moves with its symbol.
  std::mt19937_64 rng(5);
  const Pda base = golden("K12_k2_L4");
  for (int n = 0; n < 60; ++n) {
    const Pda p = n == 0 ? base : mutate(base, rng, 11);
    const Symbol b = n == 1 ? 0 : rng() % 20;
    const ValidationReport r = validate(p);
    const ValidationReport s = validate(shift_add(p, b));
    EXPECT_EQ(s.Z, r.Z);
    EXPECT_EQ(s.S, r.S);
    std::vector<Violation> expected;
    for (Symbol g = 0; g < b; ++g) expected.push_back({Condition::C2, {}, {}, g, {}});
    for (Violation v : r.violations) {
      if (v.condition == Condition::C2 && !v.symbol) continue;  // all-star arrays stay all-star
      if (v.symbol) *v.symbol += b;
      expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(s.violations, expected);
    if (b == 0) {
      EXPECT_EQ(s, r);
    }
  }
}

TEST(ValidateProperties, RegularCountsSumToGS) {
  const Pda p = golden("K12_k2_L4");
  const ValidationReport r = validate(p);
  ASSERT_TRUE(r.regular_g);
  std::size_t symbols = 0;
  for (Entry e : p.cells()) symbols += e.is_symbol();
  EXPECT_EQ(symbols, *r.regular_g * r.S);
}

TEST(ValidateProperties, CyclicShiftLawOn_36_3_9) {
  const Pda p = concat_columns({golden("K36_k3_L9_part1"), golden("K36_k3_L9_part2"), golden("K36_k3_L9_part3")});
  const ValidationReport r = validate(p);
  ASSERT_TRUE(r.cyclic_t);
  const std::size_t t = *r.cyclic_t, F = p.rows();
  for (std::size_t j = 1; j < p.cols(); ++j)
    for (std::size_t i = 0; i < F; ++i)
      EXPECT_EQ(p(i, j).is_star(), p((i + F - t) % F, j - 1).is_star());
}

TEST(ValidateProperties, EqualSymbolsHaveStarredCrosses) {
  const Pda p = golden("K12_k2_L4");
  std::map<Symbol, std::vector<Cell>> where;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p(i, j).is_symbol()) where[p(i, j).value()].push_back({i, j});
  for (const auto& [s, cells] : where)
    for (const Cell& a : cells)
      for (const Cell& b : cells) {
        if (a == b) continue;
        EXPECT_TRUE(p(a.row, b.col).is_star());
        EXPECT_TRUE(p(b.row, a.col).is_star());
      }
}

}  // namespace
}  // namespace mcc
