#pragma once

#include <absl/container/inlined_vector.h>

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aggression/graph.hpp"

namespace aggression {

enum class Player : std::uint8_t { lata = 0, raj = 1 };

constexpr Player opponent(Player p) { return p == Player::lata ? Player::raj : Player::lata; }
constexpr int index(Player p) { return static_cast<int>(p); }
std::string to_string(Player p);

enum class AttackPolicy : std::uint8_t { mandatory, optional };

struct RuleConfig {
  AttackPolicy attack_policy = AttackPolicy::mandatory;
  std::optional<int> placement_cap;  // 1 gives Micro Aggression

  static RuleConfig micro() { return {AttackPolicy::mandatory, 1}; }
  bool operator==(const RuleConfig&) const = default;
};

enum class Phase : std::uint8_t { placement, attack, terminal };
std::string to_string(Phase p);

/// One move. The defaulted ordering is the solver's tie-break ordinal:
/// placements (by vertex, then count) before pass_placement before attacks
/// (by vertex) before pass_attack.
struct Move {
  enum class Kind : std::uint8_t { place, pass_placement, attack, pass_attack };

  Kind kind = Kind::pass_placement;
  Vertex vertex = -1;
  std::int32_t count = 0;

  static Move place(Vertex v, int c) { return {Kind::place, v, c}; }
  static Move pass_placement() { return {Kind::pass_placement, -1, 0}; }
  static Move attack(Vertex v) { return {Kind::attack, v, 0}; }
  static Move pass_attack() { return {Kind::pass_attack, -1, 0}; }

  bool is_pass() const { return kind == Kind::pass_placement || kind == Kind::pass_attack; }
  auto operator<=>(const Move&) const = default;
};
std::string to_string(const Move& m);

/// (territory difference, troop difference), both Lata minus Raj, compared
/// lexicographically.
struct Payoff {
  int territory_diff = 0;
  int troop_diff = 0;

  auto operator<=>(const Payoff&) const = default;
  Payoff operator+(const Payoff& o) const {
    return {territory_diff + o.territory_diff, troop_diff + o.troop_diff};
  }
  Payoff operator-(const Payoff& o) const {
    return {territory_diff - o.territory_diff, troop_diff - o.troop_diff};
  }
  Payoff operator-() const { return {-territory_diff, -troop_diff}; }
};

enum class Result : std::uint8_t { lata_win, raj_win, draw };
std::string to_string(Result r);

struct Outcome {
  std::array<int, 2> territories{};
  std::array<int, 2> surviving_troops{};
  Result result = Result::draw;
  bool strong_win = false;

  Payoff payoff() const {
    return {territories[0] - territories[1], surviving_troops[0] - surviving_troops[1]};
  }
  static Outcome from_counts(std::array<int, 2> territories, std::array<int, 2> troops);
  bool operator==(const Outcome&) const = default;
};

/// Immutable game position. Troops are stored signed per vertex: positive for
/// Lata, negative for Raj, zero when the vertex is neutral.
class GameState {
 public:
  using Cells = absl::InlinedVector<std::int32_t, 16>;

  static GameState new_game(std::shared_ptr<const Graph> graph, int budget_lata, int budget_raj,
                            RuleConfig config = {});
  static GameState new_game(Graph graph, int budget_lata, int budget_raj, RuleConfig config = {});

  /// Arbitrary position, validated for shape only. Used by codecs and tests.
  struct Snapshot {
    std::vector<std::int32_t> signed_troops;
    std::array<int, 2> budget_remaining{};
    std::array<int, 2> initial_budget{};
    Phase phase = Phase::placement;
    Player to_move = Player::lata;
    std::optional<Player> first_passer;
    int placement_passes = 0;
    int attack_passes = 0;
  };
  static GameState from_snapshot(std::shared_ptr<const Graph> graph, const Snapshot& s,
                                 RuleConfig config = {});
  Snapshot snapshot() const;

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const RuleConfig& config() const { return config_; }

  std::optional<Player> owner(Vertex v) const {
    if (cells_[v] > 0) return Player::lata;
    if (cells_[v] < 0) return Player::raj;
    return std::nullopt;
  }
  int troops(Vertex v) const { return cells_[v] < 0 ? -cells_[v] : cells_[v]; }
  int signed_troops(Vertex v) const { return cells_[v]; }
  const Cells& cells() const { return cells_; }

  int budget_remaining(Player p) const { return budget_[index(p)]; }
  int initial_budget(Player p) const { return initial_[index(p)]; }
  Phase phase() const { return phase_; }
  Player to_move() const { return to_move_; }
  std::optional<Player> first_passer() const { return first_passer_; }
  int consecutive_placement_passes() const { return placement_passes_; }
  int consecutive_attack_passes() const { return attack_passes_; }
  bool is_terminal() const { return phase_ == Phase::terminal; }

  /// Sorted by move ordinal. Throws RuleError("game-over") when terminal.
  std::vector<Move> legal_moves() const;

  /// Calls f(move) for each legal move in ordinal order without allocating.
  template <class F>
  void for_each_legal_move(F&& f) const;

  /// Returns the violated rule name, or empty when the move is legal.
  std::string violated_rule(const Move& m) const;
  bool is_legal(const Move& m) const { return violated_rule(m).empty(); }

  GameState apply(const Move& m) const;            // validates, throws RuleError
  GameState apply_unchecked(const Move& m) const;  // caller guarantees legality

  /// Sum of troops owned by the victim's opponent on neighbours of v.
  int enemy_pressure(Vertex v) const;
  bool is_vulnerable(Vertex v) const {
    return cells_[v] != 0 && enemy_pressure(v) > troops(v);
  }
  std::vector<Vertex> vulnerable_vertices(Player victim) const;

  /// Scores the current board as if the game ended now.
  Outcome score() const;
  Payoff payoff_now() const;
  /// Throws RuleError("game-not-over") unless terminal.
  Outcome outcome() const;

  GameState relabeled(std::span<const Vertex> perm) const;

  bool operator==(const GameState& o) const;

 private:
  // Largest legal placement count for the mover, 0 when placing is impossible.
  int max_count() const;

  std::shared_ptr<const Graph> graph_;
  RuleConfig config_;
  Cells cells_;
  std::array<int, 2> budget_{};
  std::array<int, 2> initial_{};
  Phase phase_ = Phase::placement;
  Player to_move_ = Player::lata;
  std::optional<Player> first_passer_;
  std::uint8_t placement_passes_ = 0;
  std::uint8_t attack_passes_ = 0;
};

// Free-function spellings of the core operations.
inline GameState new_game(Graph g, int tl, int tr, RuleConfig c = {}) {
  return GameState::new_game(std::move(g), tl, tr, c);
}
inline std::vector<Move> legal_moves(const GameState& s) { return s.legal_moves(); }
inline GameState apply_move(const GameState& s, const Move& m) { return s.apply(m); }
inline Outcome outcome(const GameState& s) { return s.outcome(); }
inline std::vector<Vertex> vulnerable_vertices(const GameState& s, Player victim) {
  return s.vulnerable_vertices(victim);
}

template <class F>
void GameState::for_each_legal_move(F&& f) const {
  if (phase_ == Phase::placement) {
    const int cap = max_count();
    bool any = false;
    if (cap > 0) {
      for (Vertex v = 0; v < static_cast<Vertex>(cells_.size()); ++v) {
        if (cells_[v] != 0) continue;
        any = true;
        for (int c = 1; c <= cap; ++c) f(Move::place(v, c));
      }
    }
    if (!any) f(Move::pass_placement());
  } else if (phase_ == Phase::attack) {
    bool any = false;
    const bool lata = to_move_ == Player::lata;
    for (Vertex v = 0; v < static_cast<Vertex>(cells_.size()); ++v) {
      const auto c = cells_[v];
      if (c == 0 || (c > 0) == lata) continue;
      if (enemy_pressure(v) > (c < 0 ? -c : c)) {
        any = true;
        f(Move::attack(v));
      }
    }
    if (!any || config_.attack_policy == AttackPolicy::optional) f(Move::pass_attack());
  }
}

}  // namespace aggression
