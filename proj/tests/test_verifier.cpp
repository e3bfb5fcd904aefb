#include <gtest/gtest.h>

#include "aggression/errors.hpp"
#include "aggression/graphs.hpp"
#include "aggression/verifier.hpp"

using namespace aggression;

TEST(Verifier, StatusNames) {
  for (auto s : {VerificationStatus::holds, VerificationStatus::refuted, VerificationStatus::unspecified,
                 VerificationStatus::strategy_bug})
    EXPECT_EQ(parse_verification_status(to_string(s)), s);
}

TEST(Verifier, MirrorHoldsOnSmallMatchings) {
  for (int m = 1; m <= 3; ++m)
    for (int t = 1; t <= 3; ++t) {
      const auto r = verify_guarantee(StrategyId::raj_mirror_matching, matching(m), {t, t});
      EXPECT_EQ(r.status, VerificationStatus::holds) << m << " " << t;
      EXPECT_TRUE(r.holds);
      EXPECT_FALSE(r.counterexample);
      EXPECT_GT(r.lines_explored, 0u);
    }
}

TEST(Verifier, SymmetryAgreesAndShrinks) {
  const auto plain = verify_guarantee(StrategyId::raj_mirror_matching, matching(3), {3, 3});
  const auto merged =
      verify_guarantee(StrategyId::raj_mirror_matching, matching(3), {3, 3}, SymmetryGroup::matching_edges);
  EXPECT_EQ(plain.status, merged.status);
  EXPECT_EQ(merged.symmetry_used, SymmetryGroup::matching_edges);
  EXPECT_LE(merged.positions, plain.positions);
}

TEST(Verifier, UnsafeScriptsIgnoreSymmetry) {
  const auto r = verify_guarantee(StrategyId::lata_c5, cycle(5), {3, 3}, SymmetryGroup::cycle_dihedral);
  EXPECT_EQ(r.symmetry_requested, SymmetryGroup::cycle_dihedral);
  EXPECT_EQ(r.symmetry_used, SymmetryGroup::identity);
}

TEST(Verifier, CounterexampleReplays) {
  // C5 at two troops each is a Raj win under best play, so Lata's script fails.
  const auto r = verify_guarantee(StrategyId::lata_c5, cycle(5), {2, 2}, SymmetryGroup::identity,
                                  {StrategyMode::repaired});
  ASSERT_EQ(r.status, VerificationStatus::refuted);
  ASSERT_TRUE(r.counterexample);
  ASSERT_TRUE(r.counterexample_payoff);
  EXPECT_EQ(replay_line(r.graph, r.budgets, r.config, *r.counterexample), *r.counterexample_payoff);
  EXPECT_FALSE(meets(r.guarantee_claimed, Player::lata, *r.counterexample_payoff));
}

TEST(Verifier, FaithfulThreeEdgesIsIncomplete) {
  const auto faithful = verify_guarantee(StrategyId::raj_three_edges, matching(3), {9, 9});
  EXPECT_NE(faithful.status, VerificationStatus::holds);
  EXPECT_NE(faithful.status, VerificationStatus::strategy_bug);
  if (faithful.status == VerificationStatus::unspecified) {
    EXPECT_FALSE(faithful.discrepancies.unspecified.empty());
    EXPECT_GT(faithful.unspecified_lines, 0u);
  }
  const auto repaired = verify_guarantee(StrategyId::raj_three_edges, matching(3), {9, 9},
                                         SymmetryGroup::identity, {StrategyMode::repaired});
  EXPECT_EQ(repaired.status, VerificationStatus::holds);
  EXPECT_GT(repaired.discrepancies.repair_count, 0u);
}

TEST(Verifier, GuaranteeOverride) {
  VerifyOptions opts;
  opts.guarantee = Guarantee::win;
  const auto r = verify_guarantee(StrategyId::raj_mirror_matching, matching(2), {3, 3},
                                  SymmetryGroup::identity, opts);
  EXPECT_EQ(r.guarantee_claimed, Guarantee::win);
  EXPECT_EQ(r.status, VerificationStatus::refuted);
}

TEST(Verifier, Errors) {
  EXPECT_THROW(verify_guarantee(StrategyId::raj_three_edges, matching(2), {9, 9}), RuleError);
  VerifyOptions opts;
  opts.max_positions = 5;
  EXPECT_THROW(verify_guarantee(StrategyId::raj_mirror_matching, matching(3), {3, 3}, SymmetryGroup::identity, opts),
               LimitExceeded);
  EXPECT_THROW(replay_line(matching(1), {1, 1}, {}, {Move::place(0, 1)}), RuleError);
}

TEST(Verifier, Deterministic) {
  const auto a = verify_guarantee(StrategyId::raj_c5, cycle(5), {2, 2});
  const auto b = verify_guarantee(StrategyId::raj_c5, cycle(5), {2, 2});
  EXPECT_EQ(a, b);
}
