#include <gtest/gtest.h>

#include "aggression/errors.hpp"
#include "aggression/graphs.hpp"
#include "aggression/solver.hpp"

using namespace aggression;

namespace {

Payoff value(const Graph& g, int tl, int tr, RuleConfig c = {}) {
  return solve(new_game(g, tl, tr, c), natural_symmetry(g)).value;
}

constexpr Payoff kDraw{0, 0};

}  // namespace

TEST(Solver, SmallValues) {
  EXPECT_EQ(value(matching(1), 1, 1), kDraw);
  EXPECT_EQ(value(matching(2), 3, 3), kDraw);
  EXPECT_EQ(value(cycle(3), 2, 2), kDraw);
  EXPECT_EQ(value(cycle(5), 3, 3), kDraw);
  EXPECT_EQ(value(cycle(5), 2, 2), (Payoff{0, -1}));
  EXPECT_EQ(value(matching(2), 2, 2), (Payoff{0, -1}));
  EXPECT_EQ(value(path(5), 3, 3, RuleConfig::micro()), (Payoff{1, 1}));
  EXPECT_EQ(value(path(1), 4, 0), (Payoff{1, 4}));
  EXPECT_EQ(value(matching(3), 9, 9).territory_diff, -1);
}

TEST(Solver, MatchesReference) {
  for (const Graph& g : {matching(1), matching(2), path(3), path(4), cycle(3), cycle(4)})
    for (int tl = 0; tl <= 2; ++tl)
      for (int tr = 0; tr <= 2; ++tr)
        for (auto policy : {AttackPolicy::mandatory, AttackPolicy::optional}) {
          const auto s = new_game(g, tl, tr, {policy, std::nullopt});
          EXPECT_EQ(solve(s, natural_symmetry(g)).value, solve_reference(s))
              << serialize_graph(g) << " " << tl << "/" << tr;
          EXPECT_EQ(solve(s).value, solve_reference(s));
        }
}

TEST(Solver, ReferenceIsBounded) {
  EXPECT_THROW(solve_reference(new_game(path(7), 1, 1)), RuleError);
  EXPECT_THROW(solve_reference(new_game(path(3), 4, 1)), RuleError);
}

TEST(Solver, PrincipalLineReplaysToValue) {
  const auto s = new_game(cycle(4), 3, 2);
  const SolveResult r = solve(s, SymmetryGroup::cycle_dihedral);
  GameState t = s;
  for (const Move& m : r.principal_line) t = t.apply(m);
  ASSERT_TRUE(t.is_terminal());
  EXPECT_EQ(t.outcome().payoff(), r.value);
  ASSERT_TRUE(r.best_move);
  EXPECT_EQ(*r.best_move, r.principal_line.front());
}

TEST(Solver, BestMoveIsLowestOrdinalOptimal) {
  const auto s = new_game(matching(2), 3, 3);
  Solver solver(s.graph_ptr(), s.config(), SymmetryGroup::matching_edges);
  const Payoff v = solver.value(s);
  const Move best = solver.best_move(s);
  for (const auto& [m, mv] : solver.move_values(s)) {
    if (mv == v) {
      EXPECT_EQ(m, best);
      break;
    }
  }
  EXPECT_THROW(solver.best_move(s.apply(Move::place(0, 3))
                                    .apply(Move::place(1, 3))
                                    .apply(Move::pass_placement())
                                    .apply(Move::pass_placement())
                                    .apply(Move::pass_attack())
                                    .apply(Move::pass_attack())),
               RuleError);
}

TEST(Solver, TableIsReusedAcrossCalls) {
  const auto s = new_game(cycle(5), 3, 3);
  Solver solver(s.graph_ptr(), s.config(), SymmetryGroup::cycle_dihedral);
  solver.value(s);
  const auto first = solver.nodes_expanded();
  solver.value(s);
  EXPECT_EQ(solver.nodes_expanded(), first);
  EXPECT_GT(solver.table_hits(), 0u);
}

TEST(Solver, SymmetryShrinksTable) {
  const auto s = new_game(cycle(5), 3, 3);
  Solver plain(s.graph_ptr(), s.config(), SymmetryGroup::identity);
  Solver dihedral(s.graph_ptr(), s.config(), SymmetryGroup::cycle_dihedral);
  EXPECT_EQ(plain.value(s), dihedral.value(s));
  EXPECT_LT(dihedral.table_size(), plain.table_size());
}

TEST(Solver, NodeLimit) {
  const auto s = new_game(cycle(5), 30, 30);
  Solver solver(s.graph_ptr(), s.config(), SymmetryGroup::cycle_dihedral, {100, 0});
  EXPECT_THROW(solver.value(s), LimitExceeded);
  solver.set_limits({});
  EXPECT_EQ(solver.value(new_game(cycle(5), 1, 1)), kDraw);
}

TEST(Solver, RejectsForeignBoard) {
  const auto s = new_game(cycle(5), 1, 1);
  Solver solver(std::make_shared<const Graph>(cycle(4)), {}, SymmetryGroup::identity);
  EXPECT_THROW(solver.value(s), RuleError);
}

TEST(Solver, ResultOf) {
  EXPECT_EQ(result_of({0, 1}), Result::lata_win);
  EXPECT_EQ(result_of({-1, 5}), Result::raj_win);
  EXPECT_EQ(result_of({0, 0}), Result::draw);
}
