#pragma once

#include <absl/container/flat_hash_map.h>

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aggression/game.hpp"
#include "aggression/symmetry.hpp"

namespace aggression {

struct SolveLimits {
  std::uint64_t max_nodes = 0;  // 0 means unlimited
  double max_seconds = 0;       // 0 means unlimited
};

struct SolveResult {
  Payoff value;
  std::optional<Move> best_move;
  std::vector<Move> principal_line;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t table_hits = 0;
};

/// Exact minimax over lexicographic payoffs with a transposition table.
///
/// One Solver is bound to a board and rule configuration; its table persists
/// across calls, so repeated queries on related positions are cheap. Limits
/// apply per call and raise LimitExceeded; entries already stored remain
/// exact and reusable.
///
/// On perfect matchings under matching_edges the table key drops edges whose
/// endpoints are both occupied (their contribution is fixed) and the attack
/// phase is scored directly: every edge loses its weaker side and attacks on
/// different edges do not interact.
class Solver {
 public:
  Solver(std::shared_ptr<const Graph> graph, RuleConfig config, SymmetryGroup symmetry,
         SolveLimits limits = {});

  Payoff value(const GameState& s);
  SolveResult solve(const GameState& s);
  /// Lowest-ordinal optimal move. Throws RuleError("game-over") on terminal.
  Move best_move(const GameState& s);
  /// Every legal move with the value of its successor, in ordinal order.
  std::vector<std::pair<Move, Payoff>> move_values(const GameState& s);

  void set_limits(SolveLimits limits) { limits_ = limits; }
  SymmetryGroup symmetry() const { return symmetry_; }
  const Graph& graph() const { return *graph_; }
  std::uint64_t nodes_expanded() const { return total_nodes_; }
  std::uint64_t table_hits() const { return total_hits_; }
  std::size_t table_size() const { return table_.size(); }

 private:
  struct Keyed {
    std::string key;
    Payoff fixed;  // contribution already settled and left out of the key
  };

  void check_state(const GameState& s) const;
  void begin_call();
  Payoff search(const GameState& s);
  Keyed key_of(const GameState& s) const;
  Payoff matching_attack_value(const GameState& s) const;

  std::shared_ptr<const Graph> graph_;
  RuleConfig config_;
  SymmetryGroup symmetry_;
  SolveLimits limits_;
  Canonicalizer canon_;
  std::vector<Vertex> partner_;  // non-empty on perfect matchings
  bool factor_matching_ = false;
  absl::flat_hash_map<std::string, Payoff> table_;

  std::uint64_t call_nodes_ = 0;
  std::uint64_t call_hits_ = 0;
  std::uint64_t total_nodes_ = 0;
  std::uint64_t total_hits_ = 0;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_ = false;
};

/// One-shot solve with a fresh table.
SolveResult solve(const GameState& s, SymmetryGroup symmetry = SymmetryGroup::identity,
                  SolveLimits limits = {});

/// Plain recursive minimax without memo or symmetry, for cross-checking.
/// Accepts at most kReferenceMaxVertices vertices and budgets up to
/// kReferenceMaxBudget; larger inputs raise RuleError("reference-bound").
inline constexpr int kReferenceMaxVertices = 6;
inline constexpr int kReferenceMaxBudget = 3;
Payoff solve_reference(const GameState& s);

/// Result classification of a payoff's sign.
Result result_of(const Payoff& p);

}  // namespace aggression
