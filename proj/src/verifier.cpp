#include "aggression/verifier.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <chrono>
#include <climits>
#include <map>
#include <set>

#include "aggression/errors.hpp"

namespace aggression {

namespace {

constexpr int kNoFailure = INT_MAX;
constexpr std::size_t kMaxListed = 64;

struct NodeInfo {
  int fail_len = kNoFailure;  // moves to the nearest failing terminal
  std::uint64_t unspecified = 0;
};

void put32(std::string& out, std::int32_t x) {
  const auto u = static_cast<std::uint32_t>(x);
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>(u >> shift));
}

class Verifier {
 public:
  Verifier(StrategyId id, std::shared_ptr<const Graph> graph, Budgets budgets, SymmetryGroup group,
           const VerifyOptions& options, Guarantee target)
      : id_(id),
        side_(role(id)),
        target_(target),
        options_(options),
        root_(GameState::new_game(graph, budgets.lata, budgets.raj, options.config)),
        canon_(*graph, group),
        ctx_(id, root_, options.mode, target) {
    if (options.max_seconds > 0)
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(options.max_seconds));
  }

  void run(VerificationReport& r) {
    std::vector<Move> path;
    const StrategyMemory mem = initial_memory(id_, root_);
    NodeInfo info;
    try {
      info = visit(root_, mem, path);
    } catch (const StrategyBug& e) {
      r.status = VerificationStatus::strategy_bug;
      r.strategy_bug = e.what();
      r.counterexample = path;
      finish(r);
      return;
    }
    r.unspecified_lines = info.unspecified;
    if (info.fail_len != kNoFailure) {
      r.status = VerificationStatus::refuted;
      r.counterexample = shortest_failure(info.fail_len);
      r.counterexample_payoff = replay_line(root_.graph(), {root_.initial_budget(Player::lata),
                                                            root_.initial_budget(Player::raj)},
                                            root_.config(), *r.counterexample);
      if (meets(target_, side_, *r.counterexample_payoff))
        throw std::logic_error("counterexample does not violate the guarantee on replay");
    } else if (info.unspecified > 0) {
      r.status = VerificationStatus::unspecified;
    } else {
      r.status = VerificationStatus::holds;
    }
    finish(r);
  }

 private:
  void finish(VerificationReport& r) {
    r.holds = r.status == VerificationStatus::holds;
    r.lines_explored = lines_;
    r.states_deduplicated = hits_;
    r.positions = memo_.size();
    auto& d = r.discrepancies;
    d.failing_rows.assign(failing_rows_.begin(), failing_rows_.end());
    d.ambiguous_rows.assign(ambiguous_.begin(), ambiguous_.end());
    d.infeasible_rows.assign(infeasible_.begin(), infeasible_.end());
    for (const auto& [msg, count] : unspecified_) d.unspecified.push_back({msg, count});
    d.repairs.assign(repairs_.begin(), repairs_.end());
    d.repair_count = repair_count_;
  }

  std::string key(const GameState& s, const StrategyMemory& m) const {
    const auto& cells = s.cells();
    std::vector<std::int32_t> labels(cells.size());
    for (std::size_t v = 0; v < cells.size(); ++v)
      labels[v] = cells[v] * 4096 + (m.solver_mode ? 0 : m.names[v]);
    std::string out;
    canon_.encode(labels, out);
    if (!m.solver_mode)
      for (auto f : m.fields) put32(out, f);
    out.push_back(m.solver_mode ? 1 : 0);
    append_scalars(s, out);
    return out;
  }

  void tick() {
    if (options_.max_positions && memo_.size() >= options_.max_positions)
      throw LimitExceeded("verifier position limit of " + std::to_string(options_.max_positions) + " exceeded");
    if (deadline_ && (memo_.size() & 255) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw LimitExceeded("verifier time limit exceeded");
  }

  template <class T>
  static void remember(std::set<T>& s, const T& x) {
    if (s.size() < kMaxListed) s.insert(x);
  }

  void record_unspecified(const std::string& msg) {
    if (msg.rfind("infeasible:", 0) == 0) remember(infeasible_, msg);
    if (unspecified_.size() < kMaxListed || unspecified_.count(msg)) ++unspecified_[msg];
  }

  void record_note(const std::string& note, bool failing) {
    if (note.empty()) return;
    if (note.rfind("repair", 0) == 0) {
      ++repair_count_;
      remember(repairs_, note);
      return;
    }
    if (note.find("(ambiguous") != std::string::npos) remember(ambiguous_, note);
    if (failing && (note.rfind("three-edge", 0) == 0 || note.rfind("four-edge", 0) == 0))
      remember(failing_rows_, note.substr(0, note.find(" (")));
  }

  NodeInfo visit(const GameState& s, const StrategyMemory& m, std::vector<Move>& path) {
    if (s.is_terminal()) {
      ++lines_;
      return {meets(target_, side_, s.payoff_now()) ? kNoFailure : 0, 0};
    }
    std::string k = key(s, m);
    if (auto it = memo_.find(k); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
    tick();
    NodeInfo info;
    if (s.to_move() == side_) {
      std::optional<Decision> d;
      try {
        d = next_move(id_, s, m, ctx_);
      } catch (const Unspecified& e) {
        record_unspecified(e.what());
        info.unspecified = 1;
      }
      if (d) {
        path.push_back(d->move);
        const NodeInfo child = visit(s.apply_unchecked(d->move), d->memory, path);
        path.pop_back();
        info.unspecified = child.unspecified;
        if (child.fail_len != kNoFailure) info.fail_len = child.fail_len + 1;
        record_note(d->note, info.fail_len != kNoFailure);
      }
    } else {
      for (const Move& mv : s.legal_moves()) {
        path.push_back(mv);
        const NodeInfo child = visit(s.apply_unchecked(mv), relabel(id_, m, mv, s), path);
        path.pop_back();
        info.unspecified += child.unspecified;
        if (child.fail_len != kNoFailure) info.fail_len = std::min(info.fail_len, child.fail_len + 1);
      }
    }
    memo_.emplace(std::move(k), info);
    return info;
  }

  int fail_len_of(const GameState& s, const StrategyMemory& m) const {
    if (s.is_terminal()) return meets(target_, side_, s.payoff_now()) ? kNoFailure : 0;
    return memo_.at(key(s, m)).fail_len;
  }

  // Follows the memo along a line whose failing distance drops by one per move.
  std::vector<Move> shortest_failure(int length) {
    std::vector<Move> line;
    GameState s = root_;
    StrategyMemory m = initial_memory(id_, root_);
    while (!s.is_terminal()) {
      if (s.to_move() == side_) {
        const Decision d = next_move(id_, s, m, ctx_);
        line.push_back(d.move);
        s = s.apply_unchecked(d.move);
        m = d.memory;
      } else {
        bool found = false;
        for (const Move& mv : s.legal_moves()) {
          const GameState next = s.apply_unchecked(mv);
          const StrategyMemory nm = relabel(id_, m, mv, s);
          if (fail_len_of(next, nm) == length - 1) {
            line.push_back(mv);
            s = next;
            m = nm;
            found = true;
            break;
          }
        }
        if (!found) throw std::logic_error("failing line lost during reconstruction");
      }
      --length;
    }
    return line;
  }

  StrategyId id_;
  Player side_;
  Guarantee target_;
  VerifyOptions options_;
  GameState root_;
  Canonicalizer canon_;
  StrategyContext ctx_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;

  absl::flat_hash_map<std::string, NodeInfo> memo_;
  std::uint64_t lines_ = 0;
  std::uint64_t hits_ = 0;
  std::set<std::string> failing_rows_, ambiguous_, infeasible_, repairs_;
  std::map<std::string, std::uint64_t> unspecified_;
  std::uint64_t repair_count_ = 0;
};

}  // namespace

std::string_view to_string(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::holds: return "holds";
    case VerificationStatus::refuted: return "refuted";
    case VerificationStatus::unspecified: return "unspecified";
    case VerificationStatus::strategy_bug: return "strategy_bug";
  }
  return "?";
}

VerificationStatus parse_verification_status(std::string_view name) {
  for (auto s : {VerificationStatus::holds, VerificationStatus::refuted, VerificationStatus::unspecified,
                 VerificationStatus::strategy_bug})
    if (to_string(s) == name) return s;
  throw RuleError("unknown-status", "no verification status named '" + std::string(name) + "'");
}

VerificationReport verify_guarantee(StrategyId id, const Graph& graph, Budgets budgets, SymmetryGroup symmetry,
                                    const VerifyOptions& options) {
  const auto declared = applicability(id, graph, budgets, options.config);
  if (!declared)
    throw RuleError("strategy-not-applicable", std::string(to_string(id)) + " makes no claim for budgets (" +
                                                   std::to_string(budgets.lata) + ", " +
                                                   std::to_string(budgets.raj) + ") on this board");
  if (!symmetry_sound(graph, symmetry))
    throw RuleError("unsound-symmetry", "group " + to_string(symmetry) + " does not act on this board");

  VerificationReport r;
  r.strategy = id;
  r.graph = graph;
  r.budgets = budgets;
  r.config = options.config;
  r.mode = options.mode;
  r.guarantee_claimed = options.guarantee.value_or(*declared);
  r.symmetry_requested = symmetry;
  r.symmetry_used = symmetry_safe(id) ? symmetry : SymmetryGroup::identity;

  Verifier v(id, std::make_shared<const Graph>(graph), budgets, r.symmetry_used, options, r.guarantee_claimed);
  v.run(r);
  return r;
}

Payoff replay_line(const Graph& graph, Budgets budgets, const RuleConfig& config, const std::vector<Move>& line) {
  GameState s = GameState::new_game(graph, budgets.lata, budgets.raj, config);
  for (const Move& m : line) s = s.apply(m);
  return s.outcome().payoff();
}

}  // namespace aggression
