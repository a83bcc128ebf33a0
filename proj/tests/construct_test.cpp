#include <gtest/gtest.h>

#include <set>

#include "mcc/construct.hpp"
#include "mcc/validate.hpp"
#include "test_support.hpp"

namespace mcc {
namespace {

using testing::golden;
using testing::grid;

ParamErrorKind kind_of(std::size_t K, std::size_t k, std::size_t L) {
  try {
    check_params(K, k, L, K);
  } catch (const ParamError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected ParamError";
  return ParamErrorKind::not_positive;
}

TEST(CheckParams, K12_k2_L4) {
  const SchemeParams p = check_params(12, 2, 4, 12);
  EXPECT_FALSE(p.trivial);
  EXPECT_EQ(p.m, 2u);
  EXPECT_EQ(p.A_dim, 3u);
  EXPECT_EQ(p.S1, 3u);
  EXPECT_EQ(p.S1_tilde, 6u);
  EXPECT_EQ(p.g, 4u);
  EXPECT_EQ(p.S_total, 12u);
  EXPECT_EQ(p.Z, 8u);
  EXPECT_EQ(p.F, 12u);
  EXPECT_EQ(p.gamma(), Rational(1, 6));
}

TEST(CheckParams, K36_k3_L9) {
  const SchemeParams p = check_params(36, 3, 9, 36);
  EXPECT_EQ(p.m, 3u);
  EXPECT_EQ(p.A_dim, 4u);
  EXPECT_EQ(p.S1, 6u);
  EXPECT_EQ(p.S1_tilde, 18u);
  EXPECT_EQ(p.g, 6u);
  EXPECT_EQ(p.S_total, 54u);
  EXPECT_EQ(p.Z, 27u);
}

TEST(CheckParams, NamedFailures) {
  EXPECT_EQ(kind_of(12, 5, 1), ParamErrorKind::k_not_dividing_K);
  EXPECT_EQ(kind_of(12, 2, 6), ParamErrorKind::trivial_regime);
  EXPECT_EQ(kind_of(12, 2, 7), ParamErrorKind::trivial_regime);
  EXPECT_EQ(kind_of(12, 2, 3), ParamErrorKind::block_not_dividing_K);  // 12 - 6 + 2 = 8
  EXPECT_EQ(kind_of(24, 1, 1), ParamErrorKind::degenerate_block_count);
  EXPECT_EQ(kind_of(12, 12, 1), ParamErrorKind::trivial_regime);
  EXPECT_EQ(kind_of(0, 1, 1), ParamErrorKind::not_positive);
  EXPECT_EQ(kind_of(12, 13, 1), ParamErrorKind::k_not_dividing_K);
  EXPECT_THROW(check_params(12, 2, 4, 0), ParamError);
}

TEST(CheckParams, TrivialRegimeAcceptedOnRequest) {
  const SchemeParams p = check_params(12, 2, 6, 12, TrivialPolicy::accept);
  EXPECT_TRUE(p.trivial);
  EXPECT_EQ(p.S_total, 0u);
  EXPECT_EQ(p.accessible_count(), 12u);
}

TEST(CheckParams, FewerFilesThanUsersIsFlaggedOnly) {
  const SchemeParams p = check_params(12, 2, 4, 3);
  EXPECT_TRUE(p.demands_may_repeat);
  EXPECT_FALSE(check_params(12, 2, 4, 12).demands_may_repeat);
}

TEST(BuildA, K12_k2_L4) { EXPECT_EQ(build_A(check_params(12, 2, 4, 12)), golden("K12_k2_L4_A")); }

TEST(BuildA, K36_k3_L9) {
  EXPECT_EQ(build_A(check_params(36, 3, 9, 36)),
            grid({{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}}));
}

TEST(BuildA, SideTwoWhenGapEqualsK) {
  // K - kL = k: procedure 1 with a single above-diagonal cell.
  for (const testing::Triple t : {testing::Triple{8, 2, 3}, {12, 3, 3}, {4, 1, 3}}) {
    const SchemeParams p = check_params(t.K, t.k, t.L, t.K);
    EXPECT_EQ(build_A(p), grid({{-1, 0}, {-1, -1}})) << t.K << " " << t.k << " " << t.L;
  }
}

TEST(BuildA, EachSymbolOnce) {
  for (const auto& t : testing::valid_triples(48)) {
    const SchemeParams p = check_params(t.K, t.k, t.L, t.K);
    const Pda a = build_A(p);
    std::multiset<Symbol> seen;
    for (Entry e : a.cells())
      if (e.is_symbol()) seen.insert(e.value());
    ASSERT_EQ(seen.size(), p.S1);
    std::size_t expect = 0;
    for (Symbol s : seen) ASSERT_EQ(s, expect++);
  }
}

TEST(BuildP1, K12_k2_L4) {
  const SchemeParams p = check_params(12, 2, 4, 12);
  EXPECT_EQ(build_P1(build_A(p), p), golden("K12_k2_L4_P1"));
}

TEST(BuildP1, K36_k3_L9) {
  const SchemeParams p = check_params(36, 3, 9, 36);
  EXPECT_EQ(build_P1(build_A(p), p), golden("K36_k3_L9_P1"));
}

TEST(BuildP1, EveryColumnHasLStarsAndIsOneCyclic) {
  for (const auto& t : testing::valid_triples(48)) {
    const SchemeParams p = check_params(t.K, t.k, t.L, t.K);
    const ValidationReport r = validate(build_P1(build_A(p), p));
    ASSERT_TRUE(r.is_pda) << t.K << " " << t.k << " " << t.L;
    EXPECT_EQ(r.Z, t.L);
    EXPECT_EQ(r.S, p.S1);
    EXPECT_EQ(r.regular_g, p.g);
    EXPECT_EQ(r.cyclic_t, 1u);
  }
}

TEST(ExpandRows, K12_k2_L4_Part) {
  const SchemeParams p = check_params(12, 2, 4, 12);
  EXPECT_EQ(expand_rows(build_P1(build_A(p), p), p), golden("K12_k2_L4_part1"));
}

TEST(ExpandRows, K36_k3_L9) {
  const SchemeParams p = check_params(36, 3, 9, 36);
  EXPECT_EQ(expand_rows(build_P1(build_A(p), p), p), golden("K36_k3_L9_part1"));
}

TEST(ExpandRows, UnitKLeavesP1Unchanged) {
  const SchemeParams p = check_params(6, 1, 4, 6);
  const Pda p1 = build_P1(build_A(p), p);
  EXPECT_EQ(expand_rows(p1, p), p1);
}

TEST(Construct, Matrix_12_2_4) {
  const Pda p = construct(12, 2, 4);
  EXPECT_EQ(p, golden("K12_k2_L4"));
  const ValidationReport r = validate(p);
  EXPECT_TRUE(r.is_pda);
  EXPECT_EQ(r.Z, 8u);
  EXPECT_EQ(r.S, 12u);
  EXPECT_EQ(r.regular_g, 4u);
  EXPECT_EQ(r.cyclic_t, 2u);
}

TEST(Construct, Report_36_3_9) {
  const Pda p = construct(36, 3, 9);
  EXPECT_EQ(p, concat_columns({golden("K36_k3_L9_part1"), golden("K36_k3_L9_part2"), golden("K36_k3_L9_part3")}));
  const ValidationReport r = validate(p);
  EXPECT_TRUE(r.is_pda);
  EXPECT_EQ(r.rows, 36u);
  EXPECT_EQ(r.cols, 36u);
  EXPECT_EQ(r.Z, 27u);
  EXPECT_EQ(r.S, 54u);
  EXPECT_EQ(r.regular_g, 6u);
  EXPECT_EQ(r.cyclic_t, 3u);
}

TEST(Construct, SixOneFour) {
  // Procedure 1-4 run by hand: A = [[*,0,1],[*,*,2],[*,*,*]], two blocks, k = 1.
  const Pda p = construct(6, 1, 4);
  EXPECT_EQ(p, grid({{-1, 0, 1, -1, -1, -1},
                     {-1, -1, 2, 0, -1, -1},
                     {-1, -1, -1, 1, 2, -1},
                     {-1, -1, -1, -1, 0, 1},
                     {0, -1, -1, -1, -1, 2},
                     {1, 2, -1, -1, -1, -1}}));
  const ValidationReport r = validate_oracle(p);
  EXPECT_EQ(r, validate(p));
  EXPECT_TRUE(r.is_pda);
  EXPECT_EQ(r.Z, 4u);
  EXPECT_EQ(r.S, 3u);
  EXPECT_EQ(r.regular_g, 4u);
  EXPECT_EQ(r.cyclic_t, 1u);
}

TEST(Construct, PropagatesParamErrors) {
  EXPECT_THROW(construct(12, 5, 1), ParamError);
  EXPECT_THROW(construct(12, 2, 6), ParamError);
}

class ConstructFamily : public ::testing::TestWithParam<testing::Triple> {};

TEST_P(ConstructFamily, ReportedParametersAndStructure) {
  const auto [K, k, L] = GetParam();
  const SchemeParams params = check_params(K, k, L, K);
  const Pda p = construct(params);
  ASSERT_EQ(p.rows(), K);
  ASSERT_EQ(p.cols(), K);

  const ValidationReport r = validate(p);
  ASSERT_TRUE(r.is_pda);
  EXPECT_EQ(r.Z, k * L);
  EXPECT_EQ(r.S, (K - k * L) * (K - k * L + k) / 2);
  EXPECT_EQ(r.regular_g, 2 * K / (K - k * L + k));
  EXPECT_EQ(r.cyclic_t, k);

  // Star placement law: row i is starred in column j iff i is one of the kL
  // sub-files user j reads.
  for (std::size_t j = 0; j < K; ++j) {
    std::set<std::size_t> rows;
    for (std::size_t r2 = 0; r2 < k * L; ++r2) rows.insert((k * j + r2) % K);
    for (std::size_t i = 0; i < K; ++i) ASSERT_EQ(p(i, j).is_star(), rows.count(i) == 1) << i << "," << j;
  }

  // Part t (columns [t K/k, (t+1) K/k)) holds exactly [t S1~, (t+1) S1~).
  const std::size_t width = K / k;
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t i = 0; i < K; ++i)
      if (p(i, j).is_symbol()) {
        const std::size_t part = j / width;
        ASSERT_GE(p(i, j).value(), part * params.S1_tilde);
        ASSERT_LT(p(i, j).value(), (part + 1) * params.S1_tilde);
      }

  // Columns K/k apart share their star pattern.
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t i = 0; i < K; ++i) ASSERT_EQ(p(i, j).is_star(), p(i, (j + width) % K).is_star());

  EXPECT_TRUE(validate_oracle(p).is_pda);
}

INSTANTIATE_TEST_SUITE_P(UpTo48, ConstructFamily, ::testing::ValuesIn(testing::valid_triples(48)),
                         [](const auto& info) {
                           return "K" + std::to_string(info.param.K) + "_k" + std::to_string(info.param.k) + "_L" +
                                  std::to_string(info.param.L);
                         });

}  // namespace
}  // namespace mcc
