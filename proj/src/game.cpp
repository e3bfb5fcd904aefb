#include "aggression/game.hpp"

#include <algorithm>
#include <cstdlib>

#include "aggression/errors.hpp"

namespace aggression {

std::string to_string(Player p) { return p == Player::lata ? "lata" : "raj"; }

std::string to_string(Phase p) {
  switch (p) {
    case Phase::placement: return "placement";
    case Phase::attack: return "attack";
    case Phase::terminal: return "terminal";
  }
  return "?";
}

std::string to_string(Result r) {
  switch (r) {
    case Result::lata_win: return "lata_win";
    case Result::raj_win: return "raj_win";
    case Result::draw: return "draw";
  }
  return "?";
}

std::string to_string(const Move& m) {
  switch (m.kind) {
    case Move::Kind::place:
      return "place(" + std::to_string(m.vertex) + "," + std::to_string(m.count) + ")";
    case Move::Kind::pass_placement: return "pass_placement";
    case Move::Kind::attack: return "attack(" + std::to_string(m.vertex) + ")";
    case Move::Kind::pass_attack: return "pass_attack";
  }
  return "?";
}

Outcome Outcome::from_counts(std::array<int, 2> territories, std::array<int, 2> troops) {
  Outcome o;
  o.territories = territories;
  o.surviving_troops = troops;
  const Payoff p = o.payoff();
  if (p > Payoff{}) o.result = Result::lata_win;
  else if (p < Payoff{}) o.result = Result::raj_win;
  else o.result = Result::draw;
  o.strong_win = o.result != Result::draw && std::abs(p.territory_diff) >= 2;
  return o;
}

GameState GameState::new_game(std::shared_ptr<const Graph> graph, int budget_lata, int budget_raj,
                              RuleConfig config) {
  if (budget_lata < 0 || budget_raj < 0) throw RuleError("negative-budget", "budgets must be >= 0");
  if (config.placement_cap && *config.placement_cap < 1)
    throw RuleError("placement-cap", "placement cap must be >= 1");
  GameState s;
  s.graph_ = std::move(graph);
  s.config_ = config;
  s.cells_.assign(s.graph_->vertex_count(), 0);
  s.budget_ = s.initial_ = {budget_lata, budget_raj};
  return s;
}

GameState GameState::new_game(Graph graph, int budget_lata, int budget_raj, RuleConfig config) {
  return new_game(std::make_shared<const Graph>(std::move(graph)), budget_lata, budget_raj, config);
}

GameState GameState::from_snapshot(std::shared_ptr<const Graph> graph, const Snapshot& snap,
                                   RuleConfig config) {
  GameState s = new_game(std::move(graph), snap.initial_budget[0], snap.initial_budget[1], config);
  if (static_cast<int>(snap.signed_troops.size()) != s.graph_->vertex_count())
    throw RuleError("snapshot-shape", "troop vector length differs from vertex count");
  std::array<int, 2> placed{};
  for (std::size_t v = 0; v < snap.signed_troops.size(); ++v) {
    const int c = snap.signed_troops[v];
    s.cells_[v] = c;
    if (c > 0) placed[0] += c;
    if (c < 0) placed[1] -= c;
  }
  for (int p = 0; p < 2; ++p) {
    if (snap.budget_remaining[p] < 0)
      throw RuleError("snapshot-budget", "remaining budget must be >= 0");
    if (snap.phase == Phase::placement && placed[p] + snap.budget_remaining[p] != snap.initial_budget[p])
      throw RuleError("snapshot-budget", "placed troops plus remaining budget differ from initial budget");
  }
  if (snap.placement_passes < 0 || snap.placement_passes > 1 || snap.attack_passes < 0 ||
      snap.attack_passes > 2)
    throw RuleError("snapshot-passes", "pass counters out of range");
  s.budget_ = snap.budget_remaining;
  s.phase_ = snap.phase;
  s.to_move_ = snap.to_move;
  s.first_passer_ = snap.first_passer;
  s.placement_passes_ = static_cast<std::uint8_t>(snap.placement_passes);
  s.attack_passes_ = static_cast<std::uint8_t>(snap.attack_passes);
  return s;
}

GameState::Snapshot GameState::snapshot() const {
  Snapshot s;
  s.signed_troops.assign(cells_.begin(), cells_.end());
  s.budget_remaining = budget_;
  s.initial_budget = initial_;
  s.phase = phase_;
  s.to_move = to_move_;
  s.first_passer = first_passer_;
  s.placement_passes = placement_passes_;
  s.attack_passes = attack_passes_;
  return s;
}

int GameState::max_count() const {
  int c = budget_[index(to_move_)];
  if (config_.placement_cap) c = std::min(c, *config_.placement_cap);
  return c;
}

std::vector<Move> GameState::legal_moves() const {
  if (phase_ == Phase::terminal) throw RuleError("game-over", "no moves in a terminal state");
  std::vector<Move> out;
  for_each_legal_move([&](const Move& m) { out.push_back(m); });
  return out;
}

int GameState::enemy_pressure(Vertex v) const {
  const int own = cells_[v];
  int sum = 0;
  for (Vertex w : graph_->neighbors(v)) {
    const int c = cells_[w];
    if (own > 0 && c < 0) sum -= c;
    else if (own < 0 && c > 0) sum += c;
  }
  return sum;
}

std::string GameState::violated_rule(const Move& m) const {
  if (phase_ == Phase::terminal) return "game-over";
  const int n = graph_->vertex_count();
  switch (m.kind) {
    case Move::Kind::place: {
      if (phase_ != Phase::placement) return "not-placement-phase";
      if (m.vertex < 0 || m.vertex >= n) return "vertex-out-of-range";
      if (cells_[m.vertex] != 0) return "vertex-occupied";
      if (m.count < 1) return "count-below-one";
      if (m.count > budget_[index(to_move_)]) return "count-exceeds-budget";
      if (config_.placement_cap && m.count > *config_.placement_cap) return "count-exceeds-cap";
      return {};
    }
    case Move::Kind::pass_placement: {
      if (phase_ != Phase::placement) return "not-placement-phase";
      if (max_count() > 0 && std::find(cells_.begin(), cells_.end(), 0) != cells_.end())
        return "placement-available";
      return {};
    }
    case Move::Kind::attack: {
      if (phase_ != Phase::attack) return "not-attack-phase";
      if (m.vertex < 0 || m.vertex >= n) return "vertex-out-of-range";
      const int c = cells_[m.vertex];
      if (c == 0 || (c > 0) == (to_move_ == Player::lata)) return "target-not-enemy";
      if (!is_vulnerable(m.vertex)) return "target-not-vulnerable";
      return {};
    }
    case Move::Kind::pass_attack: {
      if (phase_ != Phase::attack) return "not-attack-phase";
      if (config_.attack_policy == AttackPolicy::optional) return {};
      for (Vertex v = 0; v < n; ++v) {
        const int c = cells_[v];
        if (c != 0 && (c > 0) != (to_move_ == Player::lata) && is_vulnerable(v))
          return "attack-available";
      }
      return {};
    }
  }
  return "unknown-move";
}

GameState GameState::apply(const Move& m) const {
  if (auto rule = violated_rule(m); !rule.empty()) throw RuleError(rule, to_string(m));
  return apply_unchecked(m);
}

GameState GameState::apply_unchecked(const Move& m) const {
  GameState s = *this;
  const Player me = to_move_;
  switch (m.kind) {
    case Move::Kind::place:
      s.cells_[m.vertex] = me == Player::lata ? m.count : -m.count;
      s.budget_[index(me)] -= m.count;
      s.placement_passes_ = 0;
      s.to_move_ = opponent(me);
      break;
    case Move::Kind::pass_placement:
      if (!s.first_passer_) s.first_passer_ = me;
      if (++s.placement_passes_ == 2) {
        s.phase_ = Phase::attack;
        s.placement_passes_ = 0;
        s.to_move_ = *s.first_passer_;
      } else {
        s.to_move_ = opponent(me);
      }
      break;
    case Move::Kind::attack:
      s.cells_[m.vertex] = 0;
      s.attack_passes_ = 0;
      s.to_move_ = opponent(me);
      break;
    case Move::Kind::pass_attack:
      if (++s.attack_passes_ == 2) s.phase_ = Phase::terminal;
      else s.to_move_ = opponent(me);
      break;
  }
  return s;
}

std::vector<Vertex> GameState::vulnerable_vertices(Player victim) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph_->vertex_count(); ++v) {
    const int c = cells_[v];
    if (c == 0 || (c > 0) != (victim == Player::lata)) continue;
    if (enemy_pressure(v) > troops(v)) out.push_back(v);
  }
  return out;
}

Outcome GameState::score() const {
  std::array<int, 2> terr{}, troops{};
  for (auto c : cells_) {
    if (c > 0) {
      ++terr[0];
      troops[0] += c;
    } else if (c < 0) {
      ++terr[1];
      troops[1] -= c;
    }
  }
  return Outcome::from_counts(terr, troops);
}

Payoff GameState::payoff_now() const {
  Payoff p;
  for (auto c : cells_) {
    if (c > 0) ++p.territory_diff;
    else if (c < 0) --p.territory_diff;
    p.troop_diff += c;
  }
  return p;
}

Outcome GameState::outcome() const {
  if (phase_ != Phase::terminal) throw RuleError("game-not-over", "outcome needs a terminal state");
  return score();
}

GameState GameState::relabeled(std::span<const Vertex> perm) const {
  GameState s = *this;
  s.graph_ = std::make_shared<const Graph>(graph_->relabeled(perm));
  for (std::size_t v = 0; v < cells_.size(); ++v) s.cells_[perm[v]] = cells_[v];
  return s;
}

bool GameState::operator==(const GameState& o) const {
  return *graph_ == *o.graph_ && config_ == o.config_ && cells_ == o.cells_ &&
         budget_ == o.budget_ && initial_ == o.initial_ && phase_ == o.phase_ &&
         to_move_ == o.to_move_ && first_passer_ == o.first_passer_ &&
         placement_passes_ == o.placement_passes_ && attack_passes_ == o.attack_passes_;
}

}  // namespace aggression
