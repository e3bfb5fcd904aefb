#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aggression/game.hpp"
#include "aggression/solver.hpp"

namespace aggression {

enum class StrategyId : std::uint8_t {
  raj_mirror_matching,
  lata_sparse_matching,
  lata_two_edges,
  raj_three_edges,
  raj_four_edges,
  raj_four_edges_strong,
  raj_matching_induction,
  lata_triangle,
  lata_c4,
  raj_c4,
  lata_c5,
  raj_c5,
  micro_first_path_mirror,
  micro_second_oddcycle_mirror,
};

std::string_view to_string(StrategyId id);
StrategyId parse_strategy(std::string_view name);  // throws RuleError("unknown-strategy")
const std::vector<StrategyId>& all_strategies();

enum class Guarantee : std::uint8_t { at_least_draw, win, strong_win };
std::string_view to_string(Guarantee g);
Guarantee parse_guarantee(std::string_view name);

/// Whether a final payoff satisfies the guarantee from `side`'s point of view.
bool meets(Guarantee g, Player side, const Payoff& p);

enum class StrategyMode : std::uint8_t {
  paper_faithful,  // uncovered situations raise Unspecified
  repaired,        // uncovered or losing scripted moves are replaced by solver moves
};
std::string_view to_string(StrategyMode m);
StrategyMode parse_strategy_mode(std::string_view name);

struct Budgets {
  int lata = 0;
  int raj = 0;
  bool operator==(const Budgets&) const = default;
};

Player role(StrategyId id);

/// True when every choice the script makes is a function of the position and
/// of its vertex names alone, so verification may merge symmetric positions.
bool symmetry_safe(StrategyId id);

/// Declared guarantee when the board, budgets and rules satisfy the script's
/// hypotheses; empty otherwise.
std::optional<Guarantee> applicability(StrategyId id, const Graph& g, Budgets b,
                                       const RuleConfig& config = {});

/// Private memory of a running script.
///
/// `names[v]` is the proof-level name bound to vertex v (0 when unbound);
/// names are script specific, e.g. u_i/v_i on matchings or v_1..v_n on
/// cycles. `fields` holds scalar bookkeeping. Both are part of the position
/// identity during verification; `solver_mode` marks that a repaired script
/// has handed control to the solver for the rest of the game.
struct StrategyMemory {
  std::vector<std::int16_t> names;
  std::vector<std::int32_t> fields;
  bool solver_mode = false;

  bool operator==(const StrategyMemory&) const = default;
};

/// Shared services for running a script: execution mode and, in repaired
/// mode, a solver bound to the board.
class StrategyContext {
 public:
  /// Throws RuleError("strategy-not-applicable") outside the script's
  /// hypotheses. `target` overrides the declared guarantee for repairs.
  StrategyContext(StrategyId id, const GameState& initial, StrategyMode mode,
                  std::optional<Guarantee> target = std::nullopt);

  StrategyId id() const { return id_; }
  StrategyMode mode() const { return mode_; }
  Guarantee target() const { return target_; }
  Solver& solver();

 private:
  StrategyId id_;
  StrategyMode mode_;
  Guarantee target_;
  std::shared_ptr<const Graph> graph_;
  RuleConfig config_;
  std::unique_ptr<Solver> solver_;
};

struct Decision {
  Move move;
  StrategyMemory memory;
  std::string note;  // case row used, "repair", "fill", ... (empty for plain script moves)
  bool repaired = false;
};

StrategyMemory initial_memory(StrategyId id, const GameState& initial);

/// The script's move in `state` (the script's side must be to move).
/// Paper-faithful mode raises Unspecified where the script has no answer;
/// an illegal scripted move raises StrategyBug.
Decision next_move(StrategyId id, const GameState& state, const StrategyMemory& memory,
                   StrategyContext& ctx);

/// Extends the script's naming after the opponent played `observed` in `before`.
StrategyMemory relabel(StrategyId id, const StrategyMemory& memory, const Move& observed,
                       const GameState& before);

}  // namespace aggression
