#include "aggression/solver.hpp"

#include <algorithm>

#include "aggression/errors.hpp"

namespace aggression {

namespace {

void put16(std::string& out, std::int32_t x) {
  const auto u = static_cast<std::uint32_t>(x);
  out.push_back(static_cast<char>(u >> 8));
  out.push_back(static_cast<char>(u));
}

// Final contribution of one matching edge once attacks have played out.
Payoff edge_static(std::int32_t a, std::int32_t b) {
  Payoff p;
  auto keep = [&](std::int32_t c) {
    if (c > 0) ++p.territory_diff;
    else if (c < 0) --p.territory_diff;
    p.troop_diff += c;
  };
  if ((a > 0 && b < 0) || (a < 0 && b > 0)) {
    const int ta = a < 0 ? -a : a, tb = b < 0 ? -b : b;
    if (ta > tb) keep(a);
    else if (tb > ta) keep(b);
    else {
      keep(a);
      keep(b);
    }
  } else {
    keep(a);
    keep(b);
  }
  return p;
}

}  // namespace

Result result_of(const Payoff& p) {
  if (p > Payoff{}) return Result::lata_win;
  if (p < Payoff{}) return Result::raj_win;
  return Result::draw;
}

Solver::Solver(std::shared_ptr<const Graph> graph, RuleConfig config, SymmetryGroup symmetry,
               SolveLimits limits)
    : graph_(std::move(graph)),
      config_(config),
      symmetry_(symmetry),
      limits_(limits),
      canon_(*graph_, symmetry) {
  if (auto p = perfect_matching_partners(*graph_)) {
    partner_ = std::move(*p);
    factor_matching_ = symmetry == SymmetryGroup::matching_edges;
  }
}

void Solver::check_state(const GameState& s) const {
  if (s.graph_ptr() != graph_ && s.graph() != *graph_)
    throw RuleError("solver-board", "state belongs to a different board than this solver");
  if (!(s.config() == config_))
    throw RuleError("solver-config", "state uses a different rule configuration than this solver");
  if (s.initial_budget(Player::lata) > 32767 || s.initial_budget(Player::raj) > 32767)
    throw RuleError("solver-budget", "solver keys hold at most 32767 troops per player");
}

void Solver::begin_call() {
  call_nodes_ = call_hits_ = 0;
  has_deadline_ = limits_.max_seconds > 0;
  if (has_deadline_)
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(limits_.max_seconds));
}

Payoff Solver::matching_attack_value(const GameState& s) const {
  Payoff total;
  const auto& c = s.cells();
  for (Vertex v = 0; v < static_cast<Vertex>(c.size()); ++v)
    if (v < partner_[v]) total = total + edge_static(c[v], c[partner_[v]]);
  return total;
}

Solver::Keyed Solver::key_of(const GameState& s) const {
  Keyed k;
  const auto& c = s.cells();
  if (factor_matching_) {
    std::pair<std::int32_t, std::int32_t> pairs[64];
    std::vector<std::pair<std::int32_t, std::int32_t>> spill;
    int count = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(c.size()); ++v) {
      const Vertex w = partner_[v];
      if (v > w) continue;
      if (c[v] != 0 && c[w] != 0) {
        k.fixed = k.fixed + edge_static(c[v], c[w]);
        continue;
      }
      auto pr = std::minmax(c[v], c[w]);
      if (count < 64) pairs[count++] = pr;
      else spill.push_back(pr);
    }
    spill.insert(spill.end(), pairs, pairs + count);
    std::sort(spill.begin(), spill.end());
    k.key.reserve(spill.size() * 4 + 7);
    for (auto [a, b] : spill) {
      put16(k.key, a);
      put16(k.key, b);
    }
  } else {
    for (auto x : canon_.canonical_labels({c.data(), c.size()})) put16(k.key, x);
  }
  put16(k.key, s.budget_remaining(Player::lata));
  put16(k.key, s.budget_remaining(Player::raj));
  const int fp = s.first_passer() ? 1 + index(*s.first_passer()) : 0;
  k.key.push_back(static_cast<char>(static_cast<int>(s.phase()) | (index(s.to_move()) << 2) | (fp << 3) |
                                    (s.consecutive_placement_passes() << 5) |
                                    (s.consecutive_attack_passes() << 6)));
  return k;
}

Payoff Solver::search(const GameState& s) {
  if (s.is_terminal()) return s.payoff_now();
  if (!partner_.empty() && s.phase() == Phase::attack) return matching_attack_value(s);

  Keyed k = key_of(s);
  if (auto it = table_.find(k.key); it != table_.end()) {
    ++call_hits_;
    ++total_hits_;
    return it->second + k.fixed;
  }
  ++call_nodes_;
  ++total_nodes_;
  if (limits_.max_nodes && call_nodes_ > limits_.max_nodes)
    throw LimitExceeded("node limit of " + std::to_string(limits_.max_nodes) + " exceeded");
  if (has_deadline_ && (call_nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
    throw LimitExceeded("time limit exceeded");

  const bool maximize = s.to_move() == Player::lata;
  Payoff best;
  bool first = true;
  s.for_each_legal_move([&](const Move& m) {
    const Payoff v = search(s.apply_unchecked(m));
    if (first || (maximize ? v > best : v < best)) {
      best = v;
      first = false;
    }
  });
  table_.emplace(std::move(k.key), best - k.fixed);
  return best;
}

Payoff Solver::value(const GameState& s) {
  check_state(s);
  begin_call();
  return search(s);
}

std::vector<std::pair<Move, Payoff>> Solver::move_values(const GameState& s) {
  check_state(s);
  begin_call();
  std::vector<std::pair<Move, Payoff>> out;
  for (const Move& m : s.legal_moves()) out.emplace_back(m, search(s.apply_unchecked(m)));
  return out;
}

Move Solver::best_move(const GameState& s) {
  const auto mv = move_values(s);
  const bool maximize = s.to_move() == Player::lata;
  std::size_t best = 0;
  for (std::size_t i = 1; i < mv.size(); ++i)
    if (maximize ? mv[i].second > mv[best].second : mv[i].second < mv[best].second) best = i;
  return mv[best].first;
}

SolveResult Solver::solve(const GameState& root) {
  check_state(root);
  begin_call();
  SolveResult r;
  r.value = search(root);
  r.nodes_expanded = call_nodes_;
  r.table_hits = call_hits_;
  GameState s = root;
  while (!s.is_terminal()) {
    const bool maximize = s.to_move() == Player::lata;
    std::optional<Move> pick;
    Payoff best;
    s.for_each_legal_move([&](const Move& m) {
      const Payoff v = search(s.apply_unchecked(m));
      if (!pick || (maximize ? v > best : v < best)) {
        pick = m;
        best = v;
      }
    });
    if (!r.best_move) r.best_move = pick;
    r.principal_line.push_back(*pick);
    s = s.apply_unchecked(*pick);
  }
  return r;
}

SolveResult solve(const GameState& s, SymmetryGroup symmetry, SolveLimits limits) {
  Solver solver(s.graph_ptr(), s.config(), symmetry, limits);
  return solver.solve(s);
}

namespace {

Payoff reference(const GameState& s) {
  if (s.is_terminal()) return s.payoff_now();
  const bool maximize = s.to_move() == Player::lata;
  std::optional<Payoff> best;
  for (const Move& m : s.legal_moves()) {
    const Payoff v = reference(s.apply(m));
    if (!best || (maximize ? v > *best : v < *best)) best = v;
  }
  return *best;
}

}  // namespace

Payoff solve_reference(const GameState& s) {
  if (s.graph().vertex_count() > kReferenceMaxVertices || s.initial_budget(Player::lata) > kReferenceMaxBudget ||
      s.initial_budget(Player::raj) > kReferenceMaxBudget)
    throw RuleError("reference-bound", "reference solver accepts at most " +
                                           std::to_string(kReferenceMaxVertices) + " vertices and budgets <= " +
                                           std::to_string(kReferenceMaxBudget));
  return reference(s);
}

}  // namespace aggression
