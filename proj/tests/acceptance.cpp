// Acceptance run: one PASS/FAIL line per criterion.
//
// Some criteria fail for reasons that are properties of the game rather than
// of this code. Those are listed in kKnownFailures with a short reason; they
// still print FAIL, and the run exits non-zero only when an outcome differs
// from this list in either direction.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aggression/codec.hpp"
#include "aggression/errors.hpp"
#include "aggression/graphs.hpp"
#include "aggression/optimal_response.hpp"
#include "aggression/reduction.hpp"
#include "aggression/solver.hpp"
#include "aggression/strategies.hpp"
#include "aggression/verifier.hpp"

using namespace aggression;

namespace {

using Clock = std::chrono::steady_clock;

// Wall-clock budgets in seconds.
constexpr double kOracleSeconds = 60;
constexpr double kObservationSeconds = 10;
constexpr double kLemma1Seconds = 10;
constexpr double kSparseSeconds = 60;
constexpr double kLemma3Seconds = 60;
constexpr double kLemma4Seconds = 300;
constexpr double kTheoremSeconds = 900;
constexpr double kCyclesSeconds = 300;
constexpr double kReductionSeconds = 120;
constexpr double kMicroSeconds = 300;

// Counts.
constexpr int kReductionGraphs = 20;
constexpr int kPlayouts = 10'000;
constexpr std::uint64_t kRespondNodeLimit = 50'000'000;

const std::map<std::string, std::string> kKnownFailures = {
    {"observation",
     "matching(2) T=2 is (0,-1): territories tie but Raj's 2-troop answer to a 1-troop opening wins on troops"},
    {"lemma-sparse-matching", "territories tie at every listed (T,m) but the game value is a Raj win on troops"},
    {"cycles", "C5 T=2 is (0,-1) on troops; lata_c5 cannot draw at T=2 and both C5 scripts have losing lines as written"},
    {"micro",
     "with T=n/2 rounded down Lata spends out first and leads the attack; C7 is then a Lata win, C5 a draw the script misses"},
};

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string payoff_text(const Payoff& p) {
  return "(" + std::to_string(p.territory_diff) + "," + std::to_string(p.troop_diff) + ")";
}

std::string status_text(const VerificationReport& r) {
  std::string s(to_string(r.status));
  if (r.counterexample_payoff) s += " " + payoff_text(*r.counterexample_payoff);
  return s;
}

VerificationReport verify(StrategyId id, const Graph& g, Budgets b, StrategyMode mode,
                          std::optional<Guarantee> target = std::nullopt, RuleConfig config = {}) {
  VerifyOptions o;
  o.mode = mode;
  o.config = config;
  o.guarantee = target;
  return verify_guarantee(id, g, b, natural_symmetry(g), o);
}

Payoff value(const Graph& g, int tl, int tr, RuleConfig c = {}) {
  return solve(new_game(g, tl, tr, c), natural_symmetry(g)).value;
}

// ---------------------------------------------------------------------------

Verdict oracle_equivalence() {
  Verdict v;
  std::vector<Graph> boards{matching(1), matching(2)};
  for (int n = 3; n <= 5; ++n) {
    boards.push_back(path(n));
    boards.push_back(cycle(n));
  }
  int cases = 0, policy_differs = 0;
  for (const Graph& g : boards)
    for (int tl = 0; tl <= 3; ++tl)
      for (int tr = 0; tr <= 3; ++tr)
        for (auto policy : {AttackPolicy::mandatory, AttackPolicy::optional}) {
          const auto s = new_game(g, tl, tr, {policy, std::nullopt});
          const Payoff fast = solve(s, natural_symmetry(g)).value;
          const Payoff plain = solve(s).value;
          const Payoff ref = solve_reference(s);
          ++cases;
          if (fast != ref || plain != ref)
            v.fail(serialize_graph(g) + " " + std::to_string(tl) + "/" + std::to_string(tr) + " solver " +
                   payoff_text(fast) + " reference " + payoff_text(ref));
          if (policy == AttackPolicy::optional &&
              ref != solve_reference(new_game(g, tl, tr, {AttackPolicy::mandatory, std::nullopt})))
            ++policy_differs;
        }
  // Reported only: whether the attack policy ever matters is left open.
  v.note(std::to_string(cases) + " positions; optional and mandatory policies differ on " +
         std::to_string(policy_differs));
  return v;
}

Verdict observation() {
  Verdict v;
  for (int m = 1; m <= 2; ++m)
    for (int t = 1; t <= 4; ++t) {
      const Payoff p = value(matching(m), t, t);
      if (p != Payoff{}) v.fail("matching(" + std::to_string(m) + ") T=" + std::to_string(t) + " is " + payoff_text(p));
    }
  return v;
}

Verdict lemma1() {
  Verdict v;
  for (int m = 1; m <= 4; ++m)
    for (int t = 1; t <= 4; ++t) {
      const auto r = verify(StrategyId::raj_mirror_matching, matching(m), {t, t}, StrategyMode::paper_faithful);
      if (!r.holds) v.fail("m=" + std::to_string(m) + " T=" + std::to_string(t) + " " + status_text(r));
    }
  return v;
}

Verdict lemma_sparse() {
  Verdict v;
  for (auto [t, m] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
    const Graph g = matching(m);
    const auto faithful = verify(StrategyId::lata_sparse_matching, g, {t, t}, StrategyMode::paper_faithful);
    const auto repaired = verify(StrategyId::lata_sparse_matching, g, {t, t}, StrategyMode::repaired);
    const std::string tag = "T=" + std::to_string(t) + " m=" + std::to_string(m);
    if (!faithful.holds)
      v.fail(tag + " " + status_text(faithful) + ", repaired " + status_text(repaired) + ", value " +
             payoff_text(value(g, t, t)));
  }
  return v;
}

// Faithful runs must finish without illegal moves; repaired runs must hold.
void matching_protocol(Verdict& v, StrategyId id, const Graph& g, Budgets b) {
  const std::string tag = std::string(to_string(id)) + " " + std::to_string(b.lata) + "/" + std::to_string(b.raj);
  const auto faithful = verify(id, g, b, StrategyMode::paper_faithful);
  if (faithful.status == VerificationStatus::strategy_bug) v.fail(tag + " illegal move: " + faithful.strategy_bug);
  std::ostringstream report;
  report << tag << " faithful " << status_text(faithful) << " (" << faithful.discrepancies.unspecified.size()
         << " uncovered situations, " << faithful.discrepancies.failing_rows.size() << " failing rows)";
  v.note(report.str());
  const auto repaired = verify(id, g, b, StrategyMode::repaired);
  if (!repaired.holds) v.fail(tag + " repaired " + status_text(repaired));
  else v.note(tag + " repaired holds with " + std::to_string(repaired.discrepancies.repair_count) + " repairs");
}

Verdict lemma3() {
  Verdict v;
  matching_protocol(v, StrategyId::raj_three_edges, matching(3), {9, 9});
  return v;
}

Verdict lemma4() {
  Verdict v;
  matching_protocol(v, StrategyId::raj_four_edges, matching(4), {10, 10});
  matching_protocol(v, StrategyId::raj_four_edges_strong, matching(4), {9, 10});
  return v;
}

Verdict matching_theorem() {
  Verdict v;
  const Graph g = matching(5);
  const auto win = verify(StrategyId::raj_matching_induction, g, {11, 11}, StrategyMode::repaired);
  if (!win.holds) v.fail("T=11 " + status_text(win));
  const auto strong =
      verify(StrategyId::raj_matching_induction, g, {10, 11}, StrategyMode::repaired, Guarantee::strong_win);
  if (!strong.holds) v.fail("10/11 strong " + status_text(strong));
  v.note(std::to_string(win.positions + strong.positions) + " positions");
  return v;
}

Verdict cycles() {
  Verdict v;
  for (int n = 3; n <= 5; ++n)
    for (int t = 1; t <= 3; ++t) {
      const Payoff p = value(cycle(n), t, t);
      if (p != Payoff{}) v.fail("C" + std::to_string(n) + " T=" + std::to_string(t) + " is " + payoff_text(p));
    }
  for (StrategyId id : {StrategyId::lata_c5, StrategyId::raj_c5})
    for (int t = 2; t <= 6; ++t) {
      const auto faithful = verify(id, cycle(5), {t, t}, StrategyMode::paper_faithful);
      const auto repaired = verify(id, cycle(5), {t, t}, StrategyMode::repaired);
      const std::string tag = std::string(to_string(id)) + " T=" + std::to_string(t);
      if (!faithful.holds) v.fail(tag + " faithful " + status_text(faithful));
      if (!repaired.holds) v.fail(tag + " repaired " + status_text(repaired));
    }
  return v;
}

ColoredGraph blank(int k, int n) {
  ColoredGraph g{k, n, {}, {}};
  for (int i = 0; i < k; ++i) {
    g.classes.emplace_back();
    for (int j = 0; j < n; ++j) g.classes.back().push_back(i * n + j);
  }
  return g;
}

// Sparse random edges between classes, optionally with a planted triangle.
ColoredGraph random_instance(std::mt19937& rng, bool plant) {
  constexpr int k = 3, n = 6;
  ColoredGraph g = blank(k, n);
  std::uniform_int_distribution<int> pick(0, n - 1), count(5, 9), cls(0, k - 1);
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  };
  if (plant) {
    const Vertex a = pick(rng), b = n + pick(rng), c = 2 * n + pick(rng);
    add(a, b);
    add(b, c);
    add(a, c);
  }
  for (int e = count(rng); e > 0; --e) {
    const int i = cls(rng), j = (i + 1 + rng() % (k - 1)) % k;
    add(i * n + pick(rng), j * n + pick(rng));
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  g.edges = edges;
  return g;
}

Verdict theorem1() {
  Verdict v;
  std::mt19937 rng(1);
  int agree = 0, planted = 0, clique_free = 0;
  std::uint64_t nodes = 0;
  while (planted + clique_free < kReductionGraphs) {
    const bool plant = planted < kReductionGraphs / 2;
    const ColoredGraph g = random_instance(rng, plant);
    const bool clique = brute_force_mcc(g).has_value();
    if (!plant && clique) continue;  // keep only oracle-confirmed clique-free graphs
    plant ? ++planted : ++clique_free;

    const int m = static_cast<int>(g.edges.size());
    const ReductionOutput r = reduce_mcc(g);
    const ORInstance& in = r.instance;
    if (in.lata_total() != reduction_lata_total(3, 6, m) || in.raj_total() != reduction_raj_total(3, 6, m))
      v.fail("budget formula mismatch on " + serialize_colored_graph(g));
    if (in.graph.vertex_count() != 18 + m + 3 + reduction_z_size(3, 6) || reduction_z_size(3, 6) != 13)
      v.fail("|Z| mismatch on " + serialize_colored_graph(g));
    if (!is_bipartite(in.graph)) v.fail("not bipartite: " + serialize_colored_graph(g));

    const ORAnswer a = decide_optimal_response(in, {kRespondNodeLimit});
    nodes += a.nodes;
    if (a.decision == clique) ++agree;
    else v.fail("disagreement on " + serialize_colored_graph(g));
  }
  v.note("agreement " + std::to_string(agree) + "/" + std::to_string(kReductionGraphs) + ", " +
         std::to_string(nodes) + " nodes");

  ColoredGraph fixed = blank(3, 6);
  fixed.edges = {{0, 6}, {6, 12}, {0, 12}, {1, 7}, {2, 8}, {3, 13}, {4, 14}, {9, 15}, {5, 11}};
  const ReductionOutput r = reduce_mcc(fixed);
  const auto clique = brute_force_mcc(fixed);
  std::vector<PlannedAttack> tau;
  for (int i = 0; i < 3; ++i) {
    const Vertex x = (*clique)[i];
    tau.push_back(r.name_map.at("u_{" + std::to_string(i + 1) + "," + std::to_string(x - i * 6 + 1) + "}"));
  }
  const Outcome o = simulate_response(r.instance, tau);
  if (o.territories != std::array<int, 2>{16, 15})
    v.fail("forward replay gives " + std::to_string(o.territories[0]) + " vs " + std::to_string(o.territories[1]));
  else v.note("forward replay 16 vs 15");
  return v;
}

Verdict micro() {
  Verdict v;
  const RuleConfig cap = RuleConfig::micro();
  for (int n = 2; n <= 7; ++n) {
    const int t = (n + 1) / 2;
    const auto r = verify(StrategyId::micro_first_path_mirror, path(n), {t, t}, StrategyMode::paper_faithful,
                          std::nullopt, cap);
    if (!r.holds) v.fail("path(" + std::to_string(n) + ") " + status_text(r));
  }
  for (int n : {5, 7}) {
    const int t = n / 2;
    const auto faithful = verify(StrategyId::micro_second_oddcycle_mirror, cycle(n), {t, t},
                                 StrategyMode::paper_faithful, std::nullopt, cap);
    const auto repaired = verify(StrategyId::micro_second_oddcycle_mirror, cycle(n), {t, t}, StrategyMode::repaired,
                                 std::nullopt, cap);
    const std::string tag = "C" + std::to_string(n) + " T=" + std::to_string(t);
    if (!faithful.holds) v.fail(tag + " faithful " + status_text(faithful));
    if (!repaired.holds) v.fail(tag + " repaired " + status_text(repaired));
  }
  std::string values = "P5 values";
  for (int t = 1; t <= 3; ++t) values += " T=" + std::to_string(t) + ":" + payoff_text(value(path(5), t, t, cap));
  v.note(values);
  return v;
}

Move mapped(const Move& m, const std::vector<Vertex>& perm) {
  if (m.kind == Move::Kind::place) return Move::place(perm[m.vertex], m.count);
  if (m.kind == Move::Kind::attack) return Move::attack(perm[m.vertex]);
  return m;
}

Verdict rules_invariants() {
  Verdict v;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> size(3, 8), family(0, 4), budget(0, 6), cap(0, 2);
  std::uint64_t violations = 0, moves = 0;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok && violations++ < 5) v.fail(what);
  };
  for (int game = 0; game < kPlayouts; ++game) {
    const int n = size(rng);
    Graph g;
    switch (family(rng)) {
      case 0: g = matching(std::max(1, n / 2)); break;
      case 1: g = cycle(n); break;
      case 2: g = path(n); break;
      case 3: g = star(n); break;
      default: g = complete(std::min(n, 6)); break;
    }
    RuleConfig config;
    if (game % 3 == 0) config.attack_policy = AttackPolicy::optional;
    if (const int c = cap(rng); c > 0) config.placement_cap = c;
    const int tl = budget(rng), tr = budget(rng);
    GameState s = new_game(g, tl, tr, config);
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    GameState image = s.relabeled(perm);
    std::vector<bool> destroyed(g.vertex_count(), false);
    const int bound = 2 * g.vertex_count() + tl + tr + 4;
    int steps = 0;
    while (!s.is_terminal()) {
      if (++steps > bound) {
        check(false, "no termination within " + std::to_string(bound) + " moves");
        break;
      }
      auto legal = s.legal_moves();
      auto image_legal = image.legal_moves();
      for (auto& m : legal) m = mapped(m, perm);
      std::sort(legal.begin(), legal.end());
      check(legal == image_legal, "relabeling changes the legal moves");
      legal = s.legal_moves();

      std::array<int, 2> on_board{};
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const auto o = s.owner(x);
        check(o.has_value() == (s.troops(x) > 0), "owner and troops disagree");
        if (o) on_board[*o == Player::lata ? 0 : 1] += s.troops(x);
        if (destroyed[x]) check(!o, "destroyed vertex reoccupied");
        if (s.phase() == Phase::attack && o && *o != s.to_move())
          check(s.is_legal(Move::attack(x)) == (s.enemy_pressure(x) > s.troops(x)), "vulnerability is not strict");
      }
      if (s.phase() == Phase::placement)
        for (Player p : {Player::lata, Player::raj})
          check(on_board[p == Player::lata ? 0 : 1] + s.budget_remaining(p) == s.initial_budget(p),
                "troops not conserved");

      const Move m = legal[rng() % legal.size()];
      if (m.kind == Move::Kind::attack) destroyed[m.vertex] = true;
      s = s.apply(m);
      image = image.apply(mapped(m, perm));
      ++moves;
    }
    if (s.is_terminal()) check(image.is_terminal() && image.outcome() == s.outcome(), "relabeled outcome differs");
  }
  v.note(std::to_string(kPlayouts) + " playouts, " + std::to_string(moves) + " moves, " +
         std::to_string(violations) + " violations");
  return v;
}

struct Criterion {
  std::string name;
  double seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"solver-oracle-equivalence", kOracleSeconds, oracle_equivalence},
      {"observation", kObservationSeconds, observation},
      {"lemma-mirror-matching", kLemma1Seconds, lemma1},
      {"lemma-sparse-matching", kSparseSeconds, lemma_sparse},
      {"lemma-three-edges", kLemma3Seconds, lemma3},
      {"lemma-four-edges", kLemma4Seconds, lemma4},
      {"matching-theorem", kTheoremSeconds, matching_theorem},
      {"cycles", kCyclesSeconds, cycles},
      {"optimal-response-hardness", kReductionSeconds, theorem1},
      {"micro", kMicroSeconds, micro},
      {"rules-invariants", 0, rules_invariants},
  };

  int surprises = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.seconds > 0 && secs > c.seconds)
      v.fail("took " + std::to_string(secs) + "s, budget " + std::to_string(c.seconds) + "s");

    const auto known = kKnownFailures.find(c.name);
    std::string line = (v.pass ? "PASS " : "FAIL ") + c.name;
    if (!v.pass && known != kKnownFailures.end()) line += " (expected: " + known->second + ")";
    if (v.pass && known != kKnownFailures.end()) line += " (listed as a known failure)";
    if (v.pass == (known != kKnownFailures.end())) ++surprises;
    char t[32];
    std::snprintf(t, sizeof t, " [%.1fs]", secs);
    std::printf("%s%s\n", line.c_str(), t);
    for (const auto& n : v.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria, %d outcome(s) differ from the known-failure list\n",
              static_cast<int>(criteria.size()), surprises);
  return surprises == 0 ? 0 : 1;
}
