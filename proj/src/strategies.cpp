#include "aggression/strategies.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <numeric>
#include <tuple>

#include "aggression/case_tables.hpp"
#include "aggression/errors.hpp"
#include "aggression/symmetry.hpp"

namespace aggression {

namespace {

constexpr std::array<std::string_view, 14> kStrategyNames = {
    "raj_mirror_matching", "lata_sparse_matching", "lata_two_edges",  "raj_three_edges",
    "raj_four_edges",      "raj_four_edges_strong", "raj_matching_induction", "lata_triangle",
    "lata_c4",             "raj_c4",                "lata_c5",         "raj_c5",
    "micro_first_path_mirror", "micro_second_oddcycle_mirror",
};

int ceil_half(int t) { return (t + 1) / 2; }
int floor_half(int t) { return t / 2; }

int own_vertex_count(const GameState& s, Player p) {
  int c = 0;
  for (Vertex v = 0; v < s.graph().vertex_count(); ++v)
    if (s.owner(v) == p) ++c;
  return c;
}

int empty_count(const GameState& s) {
  int c = 0;
  for (auto x : s.cells())
    if (x == 0) ++c;
  return c;
}

std::optional<Vertex> lowest_empty(const GameState& s) {
  for (Vertex v = 0; v < s.graph().vertex_count(); ++v)
    if (!s.owner(v)) return v;
  return std::nullopt;
}

// Respects the mover's remaining budget and the placement cap.
Move place(const GameState& s, Vertex v, int count) {
  count = std::min(count, s.budget_remaining(s.to_move()));
  if (s.config().placement_cap) count = std::min(count, *s.config().placement_cap);
  return Move::place(v, count);
}

Move lowest_attack_or_pass(const GameState& s) {
  std::optional<Move> pick;
  s.for_each_legal_move([&](const Move& m) {
    if (!pick && m.kind == Move::Kind::attack) pick = m;
  });
  return pick ? *pick : Move::pass_attack();
}

Move attack_preferring(const GameState& s, std::initializer_list<Vertex> targets) {
  for (Vertex v : targets)
    if (v >= 0 && s.is_legal(Move::attack(v))) return Move::attack(v);
  return lowest_attack_or_pass(s);
}

Vertex named(const StrategyMemory& m, int name) {
  for (std::size_t v = 0; v < m.names.size(); ++v)
    if (m.names[v] == name) return static_cast<Vertex>(v);
  return -1;
}

bool is_perfect_matching(const Graph& g) { return perfect_matching_partners(g).has_value(); }

bool is_cycle(const Graph& g, int n) { return g.vertex_count() == n && cycle_order(g).has_value(); }

bool standard_rules(const RuleConfig& c) { return !c.placement_cap; }

class Script {
 public:
  virtual ~Script() = default;
  virtual Player role() const = 0;
  virtual bool equivariant() const { return false; }
  virtual std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const = 0;
  virtual void init(const GameState&, StrategyMemory&) const {}
  virtual void observe(StrategyMemory&, const Move&, const GameState&) const {}
  virtual Move decide(const GameState& s, StrategyMemory& m, std::string& note) const = 0;
};

// ---------------------------------------------------------------------------
// Matchings

Vertex partner(const GameState& s, Vertex v) { return s.graph().neighbors(v)[0]; }

// Names: u_i = 2i-1 (Lata's endpoint), v_i = 2i (Raj's endpoint).
void bind_pair(StrategyMemory& m, Vertex u, Vertex v) {
  const int i = ++m.fields[0];
  m.names[u] = static_cast<std::int16_t>(2 * i - 1);
  m.names[v] = static_cast<std::int16_t>(2 * i);
}

// Highest i with Lata on u_i and v_i still empty; 0 when none.
int pending_pair(const GameState& s, const StrategyMemory& m) {
  int best = 0;
  for (Vertex v = 0; v < s.graph().vertex_count(); ++v) {
    const int tag = m.names[v];
    if (tag % 2 == 1 && s.owner(v) == Player::lata && !s.owner(partner(s, v)))
      best = std::max(best, (tag + 1) / 2);
  }
  return best;
}

// Raj's placement when the script has nothing specific to say. The choice
// depends only on the board and the names, so symmetric positions get
// symmetric answers: untouched edges first, then the lowest name, then the
// troops on the partner.
Move raj_matching_fill(const GameState& s, StrategyMemory& m, std::string& note, bool bind) {
  std::optional<std::tuple<int, int, int, Vertex>> best;
  for (Vertex v = 0; v < s.graph().vertex_count(); ++v) {
    if (s.owner(v)) continue;
    const Vertex p = partner(s, v);
    std::tuple<int, int, int, Vertex> key{s.owner(p) ? 1 : 0, m.names[v], s.signed_troops(p), v};
    if (!best || key < *best) best = key;
  }
  const Vertex v = std::get<3>(*best);
  const Vertex p = partner(s, v);
  if (bind && m.names[v] == 0 && !s.owner(p)) bind_pair(m, p, v);
  note = "fill";
  return place(s, v, empty_count(s) == 1 ? s.budget_remaining(Player::raj) : 1);
}

class RajMirrorMatching : public Script {
 public:
  Player role() const override { return Player::raj; }
  bool equivariant() const override { return true; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig&) const override {
    if (!is_perfect_matching(g) || b.lata < 1 || b.raj < b.lata) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  Move decide(const GameState& s, StrategyMemory& m, std::string& note) const override {
    if (s.phase() == Phase::attack) return lowest_attack_or_pass(s);
    std::optional<std::pair<int, Vertex>> best;
    for (Vertex v = 0; v < s.graph().vertex_count(); ++v) {
      if (s.owner(v)) continue;
      const Vertex p = partner(s, v);
      if (s.owner(p) != Player::lata) continue;
      std::pair<int, Vertex> key{s.troops(p), v};
      if (!best || key < *best) best = key;
    }
    if (best) return place(s, best->second, best->first);
    return raj_matching_fill(s, m, note, false);
  }
};

enum SubgameMode { kInduction = 0, kThreeEdges = 1, kFourEdges = 2, kStrong = 3 };
enum Response { kUnset = 0, kScary = 1, kTriumphant = 2 };

// fields: [0] pairs named, [1] sub-game mode, [2] first pair of the sub-game,
// [3] Lata's troops when the sub-game began, [4] scary or triumphant.
class RajMatchingScript : public Script {
 public:
  explicit RajMatchingScript(SubgameMode mode) : mode_(mode) {}

  Player role() const override { return Player::raj; }
  bool equivariant() const override { return true; }

  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (!standard_rules(c) || !is_perfect_matching(g)) return std::nullopt;
    const int edges = g.vertex_count() / 2;
    switch (mode_) {
      case kThreeEdges:
        if (edges == 3 && b.lata == b.raj && b.raj >= 9) return Guarantee::win;
        break;
      case kFourEdges:
        if (edges == 4 && b.lata == b.raj && b.raj >= 10) return Guarantee::win;
        break;
      case kStrong:
        if (edges == 4 && b.raj >= 10 && b.lata >= 1 && b.lata <= 9) return Guarantee::strong_win;
        break;
      case kInduction:
        if (edges < 4) break;
        if (b.lata == b.raj && b.raj >= edges + 6) return Guarantee::win;
        if (b.raj >= edges + 6 && b.lata >= 1 && b.lata < b.raj) return Guarantee::strong_win;
        break;
    }
    return std::nullopt;
  }

  void init(const GameState& s, StrategyMemory& m) const override {
    m.fields = {0, mode_, 1, mode_ == kInduction ? 0 : s.initial_budget(Player::lata), kUnset};
  }

  void observe(StrategyMemory& m, const Move& mv, const GameState& before) const override {
    if (mv.kind != Move::Kind::place || m.names[mv.vertex] != 0) return;
    bind_pair(m, mv.vertex, partner(before, mv.vertex));
  }

  Move decide(const GameState& s, StrategyMemory& m, std::string& note) const override {
    if (s.phase() == Phase::attack) return lowest_attack_or_pass(s);
    const int i = pending_pair(s, m);
    if (i == 0) return raj_matching_fill(s, m, note, true);
    if (m.fields[1] == kInduction) return induction(s, m, i, note);
    return subgame(s, m, i, note);
  }

 private:
  Move induction(const GameState& s, StrategyMemory& m, int i, std::string& note) const {
    const int n = s.graph().vertex_count() / 2;
    const Vertex v = named(m, 2 * i);
    const int t = s.troops(named(m, 2 * i - 1));
    const int k = s.budget_remaining(Player::lata) + t;
    const int r = s.budget_remaining(Player::raj);
    auto start = [&](SubgameMode mode) {
      m.fields[1] = mode;
      m.fields[2] = i;
      m.fields[3] = k;
      return subgame(s, m, i, note);
    };
    if (r == k) {
      if (i == n - 3) return start(kFourEdges);
      if (k - t < (n - i) + 6) {
        note = "dangerous";
        return place(s, v, 1);
      }
      note = "normal";
      return place(s, v, t);
    }
    if (r > k) {
      if (n - i + 1 == 4) return start(kStrong);
      if (r - t >= (n - i) + 6) {
        note = "ahead: mirror";
        return place(s, v, t);
      }
      note = "ahead: concede";
      return place(s, v, 1);
    }
    throw Unspecified("behind: Raj has " + std::to_string(r) + " troops against Lata's " + std::to_string(k));
  }

  Move subgame(const GameState& s, StrategyMemory& m, int i, std::string& note) const {
    const int mode = m.fields[1];
    const int first = m.fields[2];
    const int j = i - first;
    const Vertex v = named(m, 2 * i);
    const int f = s.troops(named(m, 2 * i - 1));
    const int r = s.budget_remaining(Player::raj);

    if (j == 0) {
      if (f >= (mode == kStrong ? 4 : 5)) {
        m.fields[4] = kScary;
        note = "scary";
        return place(s, v, 1);
      }
      m.fields[4] = kTriumphant;
      if (f + 1 > r)
        throw Unspecified("infeasible: triumphant reply needs " + std::to_string(f + 1) + " troops, Raj has " +
                          std::to_string(r));
      note = "triumphant";
      return place(s, v, f + 1);
    }

    if (m.fields[4] == kScary) {
      if (f + 1 > r)
        throw Unspecified("infeasible: scary follow-up needs " + std::to_string(f + 1) + " troops, Raj has " +
                          std::to_string(r));
      return place(s, v, f + 1);
    }

    const auto& rows = mode == kThreeEdges ? three_edge_rows() : four_edge_rows();
    const int slots = rows.front().slots();
    if (j > slots) return raj_matching_fill(s, m, note, true);

    const int opening = s.troops(named(m, 2 * first - 1));
    const int key = m.fields[3] - opening;
    const int lata_left = s.budget_remaining(Player::lata);
    std::string prefix;
    for (int t = 0; t < j; ++t) prefix += " " + std::to_string(s.troops(named(m, 2 * (first + t + 1) - 1)));

    const CaseRow* pick = nullptr;
    int reply = 0;
    std::vector<std::string> rivals;
    for (const auto& row : rows) {
      if (row.lata_remaining != key) continue;
      bool ok = true;
      for (int t = 0; t < j && ok; ++t)
        ok = row.lata[t] == s.troops(named(m, 2 * (first + t + 1) - 1));
      int future = 0;
      for (int t = j; t < slots; ++t) future += row.lata[t];
      if (!ok || future != lata_left) continue;
      int q = row.raj[j - 1];
      if (mode == kStrong) {
        for (int t = 0; t < slots; ++t)
          if (row.lata[t] == row.raj[t] && row.raj[t] > 0) {
            if (t == j - 1) ++q;
            break;
          }
      }
      if (!pick) {
        pick = &row;
        reply = q;
      } else if (q != reply) {
        rivals.push_back(row.id);
      }
    }
    if (!pick)
      throw Unspecified("no-row: Lata played" + prefix + " with " + std::to_string(key) + " after the opening and " +
                        std::to_string(lata_left) + " left");
    note = pick->id;
    if (!rivals.empty()) {
      note += " (ambiguous with";
      for (const auto& id : rivals) note += " " + id;
      note += ")";
    }
    if (reply == 0) {
      std::string row_note = note;
      Move mv = raj_matching_fill(s, m, note, true);
      note = row_note + " (fill)";
      return mv;
    }
    if (reply > r)
      throw Unspecified("infeasible: " + pick->id + " prescribes " + std::to_string(reply) + " troops, Raj has " +
                        std::to_string(r));
    return place(s, v, reply);
  }

  SubgameMode mode_;
};

class LataSparseMatching : public Script {
 public:
  Player role() const override { return Player::lata; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (!standard_rules(c) || !is_perfect_matching(g) || b.lata != b.raj || b.lata < 1) return std::nullopt;
    if (static_cast<int>(g.vertex_count() / 2) < 2 * b.lata) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  Move decide(const GameState& s, StrategyMemory&, std::string& note) const override {
    if (s.phase() == Phase::attack) return lowest_attack_or_pass(s);
    for (const auto& [a, b] : s.graph().edges())
      if (!s.owner(a) && !s.owner(b)) return place(s, a, 1);
    // Spread over vertices whose partner is not Raj's; the last such vertex
    // takes everything left.
    std::vector<Vertex> safe;
    for (Vertex v = 0; v < s.graph().vertex_count(); ++v)
      if (!s.owner(v) && s.owner(partner(s, v)) != Player::raj) safe.push_back(v);
    note = "spread";
    const int left = s.budget_remaining(Player::lata);
    if (!safe.empty()) return place(s, safe.front(), safe.size() == 1 ? left : 1);
    const Vertex v = *lowest_empty(s);
    return place(s, v, empty_count(s) == 1 ? left : 1);
  }
};

class LataTwoEdges : public Script {
 public:
  Player role() const override { return Player::lata; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (!standard_rules(c) || !is_perfect_matching(g) || b.lata != b.raj || b.lata < 1) return std::nullopt;
    const int m = g.vertex_count() / 2;
    if (m != 1 && m != 2) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  Move decide(const GameState& s, StrategyMemory&, std::string&) const override {
    if (s.phase() == Phase::attack) return lowest_attack_or_pass(s);
    const int t = s.initial_budget(Player::lata);
    const int placed = own_vertex_count(s, Player::lata);
    if (s.graph().vertex_count() == 2) {
      if (placed == 0) return place(s, *lowest_empty(s), t);
      throw Unspecified("single edge: nothing left to place");
    }
    const Vertex u = 0, v = partner(s, 0);
    if (placed == 0) return place(s, u, ceil_half(t));
    if (placed == 1) {
      if (s.owner(v) == Player::raj) {
        Vertex x = 0;
        while (x == u || x == v) ++x;
        return place(s, x, floor_half(t));
      }
      return place(s, v, floor_half(t));
    }
    throw Unspecified("two edges: both halves already placed");
  }
};

// ---------------------------------------------------------------------------
// Cycles

struct Ring {
  std::vector<Vertex> order;
  std::vector<int> pos;

  explicit Ring(const Graph& g) : order(*cycle_order(g)), pos(order.size()) {
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  }
  int size() const { return static_cast<int>(order.size()); }
  // Vertex called v_k when `anchor` is v_1 and names increase in direction dir.
  Vertex at(Vertex anchor, int dir, int k) const {
    const int n = size();
    return order[(((pos[anchor] + dir * (k - 1)) % n) + n) % n];
  }
  Vertex reflect(Vertex v) const { return order[(size() - pos[v]) % size()]; }
};

// fields[0] = v_1, fields[1] = orientation (0 while unbound).
void bind_ring(StrategyMemory& m, const Ring& ring, Vertex v, int name) {
  const Vertex anchor = m.fields[0];
  int dir = 0;
  for (int d : {1, -1})
    if (ring.at(anchor, d, name) == v) {
      dir = d;
      break;
    }
  if (dir == 0)
    throw StrategyBug("vertex " + std::to_string(v) + " cannot be named v_" + std::to_string(name) +
                      " with v_1 = " + std::to_string(anchor));
  if (m.fields[1] != 0 && m.fields[1] != dir && ring.at(anchor, m.fields[1], name) != v)
    throw StrategyBug("naming of vertex " + std::to_string(v) + " conflicts with the bound orientation");
  if (m.fields[1] == 0) m.fields[1] = dir;
  for (int k = 1; k <= ring.size(); ++k) m.names[ring.at(anchor, m.fields[1], k)] = static_cast<std::int16_t>(k);
}

class LataTriangle : public Script {
 public:
  Player role() const override { return Player::lata; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (!standard_rules(c) || !is_cycle(g, 3) || b.lata != b.raj || b.lata < 1) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  Move decide(const GameState& s, StrategyMemory&, std::string&) const override {
    if (s.phase() == Phase::attack) return lowest_attack_or_pass(s);
    return place(s, *lowest_empty(s), s.budget_remaining(Player::lata));
  }
};

class LataC4 : public Script {
 public:
  Player role() const override { return Player::lata; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (!standard_rules(c) || !is_cycle(g, 4) || b.lata != b.raj || b.lata < 1) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  Move decide(const GameState& s, StrategyMemory&, std::string&) const override {
    if (s.phase() == Phase::attack) return lowest_attack_or_pass(s);
    const int t = s.initial_budget(Player::lata);
    if (own_vertex_count(s, Player::lata) == 0) return place(s, *lowest_empty(s), ceil_half(t));
    Vertex mine = 0;
    while (s.owner(mine) != Player::lata) ++mine;
    for (Vertex w : s.graph().neighbors(mine))
      if (!s.owner(w)) return place(s, w, floor_half(t));
    throw Unspecified("no free neighbour for the second half");
  }
};

class RajC4 : public Script {
 public:
  Player role() const override { return Player::raj; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (!standard_rules(c) || !is_cycle(g, 4) || b.lata != b.raj || b.lata < 1) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  Move decide(const GameState& s, StrategyMemory&, std::string&) const override {
    if (s.phase() == Phase::attack) return lowest_attack_or_pass(s);
    const int t = s.initial_budget(Player::raj);
    if (own_vertex_count(s, Player::raj) == 0) {
      Vertex v1 = 0;
      while (s.owner(v1) != Player::lata) ++v1;
      Vertex v3 = 0;
      while (v3 == v1 || s.graph().adjacent(v1, v3)) ++v3;
      return place(s, v3, s.troops(v1) == t ? t : ceil_half(t));
    }
    return place(s, *lowest_empty(s), floor_half(t));
  }
};

// fields: [0] v_1, [1] orientation, [2] branch, [3] Raj's first count.
class LataC5 : public Script {
 public:
  Player role() const override { return Player::lata; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (!standard_rules(c) || !is_cycle(g, 5) || b.lata != b.raj || b.lata < 2) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  void init(const GameState&, StrategyMemory& m) const override { m.fields = {-1, 0, 0, 0}; }

  void observe(StrategyMemory& m, const Move& mv, const GameState& before) const override {
    if (mv.kind != Move::Kind::place || m.fields[0] < 0 || m.fields[1] != 0) return;
    const Ring ring(before.graph());
    const int t = before.initial_budget(Player::lata);
    const int a = mv.count;
    const bool adjacent = before.graph().adjacent(m.fields[0], mv.vertex);
    bind_ring(m, ring, mv.vertex, adjacent ? 2 : 3);
    m.fields[3] = a;
    if (adjacent) m.fields[2] = a == t ? 1 : 2;
    else if (a == t) m.fields[2] = 3;
    else if (a < ceil_half(t)) m.fields[2] = 4;
    else if (a == ceil_half(t)) m.fields[2] = 5;
    else m.fields[2] = 6;
  }

  Move decide(const GameState& s, StrategyMemory& m, std::string& note) const override {
    auto v = [&](int k) { return named(m, k); };
    const int branch = m.fields[2];
    if (s.phase() == Phase::attack) {
      switch (branch) {
        case 2: return attack_preferring(s, {v(2)});
        case 4: return attack_preferring(s, {v(3)});
        case 5: return attack_preferring(s, {v(5)});
        case 6: return attack_preferring(s, {v(2), v(4)});
        default: return lowest_attack_or_pass(s);
      }
    }
    const int t = s.initial_budget(Player::lata);
    const int placed = own_vertex_count(s, Player::lata);
    if (placed == 0) {
      const Vertex v1 = *lowest_empty(s);
      m.fields[0] = v1;
      m.names[v1] = 1;
      return place(s, v1, floor_half(t));
    }
    note = "branch " + std::to_string(branch);
    if (placed == 1) {
      switch (branch) {
        case 1: return place(s, v(5), 1);
        case 2: return place(s, v(3), ceil_half(t));
        case 3: return place(s, v(5), ceil_half(t));
        case 4:
        case 5: return place(s, v(2), ceil_half(t));
        case 6: return place(s, v(5), ceil_half(t));
        default: break;
      }
    }
    if (placed == 2 && branch == 1 && !s.owner(v(4))) return place(s, v(4), s.budget_remaining(Player::lata));
    throw Unspecified("five-cycle: no scripted placement in branch " + std::to_string(branch));
  }
};

// fields: [0] v_1, [1] orientation, [2] case, [3] name of Lata's second vertex.
class RajC5 : public Script {
 public:
  enum Case { kNone = 0, kAll = 1, kA = 2, kB = 3, kC = 4 };

  Player role() const override { return Player::raj; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (!standard_rules(c) || !is_cycle(g, 5) || b.lata != b.raj || b.lata < 1) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  void init(const GameState&, StrategyMemory& m) const override { m.fields = {-1, 0, kNone, 0}; }

  void observe(StrategyMemory& m, const Move& mv, const GameState& before) const override {
    if (mv.kind != Move::Kind::place) return;
    const int t = before.initial_budget(Player::lata);
    if (m.fields[0] < 0) {
      const Ring ring(before.graph());
      m.fields[0] = mv.vertex;
      const auto nb = before.graph().neighbors(mv.vertex);
      bind_ring(m, ring, *std::min_element(nb.begin(), nb.end()), 5);
      if (mv.count == t) m.fields[2] = kAll;
      return;
    }
    if (m.fields[2] != kNone) return;
    const int x = before.troops(m.fields[0]);
    const int y = mv.count;
    m.fields[3] = m.names[mv.vertex];
    if (y == t - x) m.fields[2] = kA;
    else if (y >= ceil_half(t)) m.fields[2] = kB;
    else m.fields[2] = kC;
  }

  Move decide(const GameState& s, StrategyMemory& m, std::string& note) const override {
    auto v = [&](int k) { return named(m, k); };
    const int kind = m.fields[2];
    const int second = m.fields[3];
    if (s.phase() == Phase::attack) {
      if (kind == kB && second == 3) return attack_preferring(s, {v(1), v(4)});
      if (kind == kC && second == 4) return attack_preferring(s, {v(1)});
      return lowest_attack_or_pass(s);
    }
    const int t = s.initial_budget(Player::raj);
    const int placed = own_vertex_count(s, Player::raj);
    if (placed == 0) {
      if (kind == kAll) return place(s, v(3), 1);
      return place(s, v(5), floor_half(t));
    }
    if (placed == 1) {
      if (kind == kAll) return place(s, v(4), s.budget_remaining(Player::raj));
      static constexpr int kReply[3][3] = {
          {3, 4, 2},  // Lata's second move took everything left
          {4, 2, 2},  // at least half, but not everything
          {3, 2, 2},  // less than half
      };
      if (kind >= kA && second >= 2 && second <= 4) {
        note = std::string("case ") + "ABC"[kind - kA] + " on v_" + std::to_string(second);
        return place(s, v(kReply[kind - kA][second - 2]), ceil_half(t));
      }
    }
    throw Unspecified("five-cycle: no scripted placement for Raj");
  }
};

// ---------------------------------------------------------------------------
// Micro Aggression mirrors
//
// fields: [0] opponent's last placement, [1] opponent's last attack target,
// [2] own attacks so far.

void observe_mirror(StrategyMemory& m, const Move& mv) {
  if (mv.kind == Move::Kind::place) m.fields[0] = mv.vertex;
  if (mv.kind == Move::Kind::attack) m.fields[1] = mv.vertex;
}

class MicroPathMirror : public Script {
 public:
  Player role() const override { return Player::lata; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    if (c.placement_cap != 1 || !path_order(g) || b.lata != b.raj || b.lata < 1) return std::nullopt;
    return Guarantee::at_least_draw;
  }
  void init(const GameState&, StrategyMemory& m) const override { m.fields = {-1, -1, 0}; }
  void observe(StrategyMemory& m, const Move& mv, const GameState&) const override { observe_mirror(m, mv); }

  Move decide(const GameState& s, StrategyMemory& m, std::string& note) const override {
    const auto order = *path_order(s.graph());
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    auto reflect = [&](Vertex v) { return order[n - 1 - pos[v]]; };

    if (s.phase() == Phase::attack) {
      Move mv = Move::pass_attack();
      if (m.fields[2] == 0 && n % 2 == 0) mv = attack_preferring(s, {order[n / 2 - 1], order[n / 2]});
      else mv = attack_preferring(s, {m.fields[1] >= 0 ? reflect(m.fields[1]) : -1});
      if (mv.kind == Move::Kind::attack) ++m.fields[2];
      return mv;
    }
    if (own_vertex_count(s, Player::lata) == 0) return place(s, n % 2 ? order[n / 2] : 0, 1);
    const Vertex r = m.fields[0];
    if (r >= 0 && !s.owner(reflect(r))) return place(s, reflect(r), 1);
    note = "arbitrary";
    return place(s, *lowest_empty(s), 1);
  }
};

class MicroOddCycleMirror : public Script {
 public:
  Player role() const override { return Player::raj; }
  std::optional<Guarantee> applicable(const Graph& g, Budgets b, const RuleConfig& c) const override {
    const int n = g.vertex_count();
    if (c.placement_cap != 1 || n < 5 || n % 2 == 0 || !is_cycle(g, n) || b.lata != b.raj || b.lata < 1)
      return std::nullopt;
    return Guarantee::at_least_draw;
  }
  void init(const GameState&, StrategyMemory& m) const override { m.fields = {-1, -1, 0}; }
  void observe(StrategyMemory& m, const Move& mv, const GameState&) const override { observe_mirror(m, mv); }

  Move decide(const GameState& s, StrategyMemory& m, std::string& note) const override {
    const Ring ring(s.graph());
    const int n = ring.size();
    const Vertex centre = ring.order[0];
    if (s.phase() == Phase::attack) {
      Move mv = Move::pass_attack();
      if (m.fields[2] == 0) {
        const auto& o = ring.order;
        mv = attack_preferring(s, {o[0], o[1], o[n - 1], o[(n - 1) / 2], o[(n + 1) / 2]});
      } else {
        mv = attack_preferring(s, {m.fields[1] >= 0 ? ring.reflect(m.fields[1]) : -1});
      }
      if (mv.kind == Move::Kind::attack) ++m.fields[2];
      return mv;
    }
    const Vertex l = m.fields[0];
    if (l >= 0 && l != centre && !s.owner(ring.reflect(l))) return place(s, ring.reflect(l), 1);
    note = "arbitrary";
    return place(s, *lowest_empty(s), 1);
  }
};

const Script& script(StrategyId id) {
  static const RajMirrorMatching mirror;
  static const LataSparseMatching sparse;
  static const LataTwoEdges two;
  static const RajMatchingScript three(kThreeEdges), four(kFourEdges), strong(kStrong), induction(kInduction);
  static const LataTriangle triangle;
  static const LataC4 lata_c4;
  static const RajC4 raj_c4;
  static const LataC5 lata_c5;
  static const RajC5 raj_c5;
  static const MicroPathMirror path_mirror;
  static const MicroOddCycleMirror cycle_mirror;
  switch (id) {
    case StrategyId::raj_mirror_matching: return mirror;
    case StrategyId::lata_sparse_matching: return sparse;
    case StrategyId::lata_two_edges: return two;
    case StrategyId::raj_three_edges: return three;
    case StrategyId::raj_four_edges: return four;
    case StrategyId::raj_four_edges_strong: return strong;
    case StrategyId::raj_matching_induction: return induction;
    case StrategyId::lata_triangle: return triangle;
    case StrategyId::lata_c4: return lata_c4;
    case StrategyId::raj_c4: return raj_c4;
    case StrategyId::lata_c5: return lata_c5;
    case StrategyId::raj_c5: return raj_c5;
    case StrategyId::micro_first_path_mirror: return path_mirror;
    case StrategyId::micro_second_oddcycle_mirror: return cycle_mirror;
  }
  throw StrategyBug("unknown strategy id");
}

}  // namespace

std::string_view to_string(StrategyId id) { return kStrategyNames.at(static_cast<std::size_t>(id)); }

StrategyId parse_strategy(std::string_view name) {
  for (std::size_t i = 0; i < kStrategyNames.size(); ++i)
    if (kStrategyNames[i] == name) return static_cast<StrategyId>(i);
  throw RuleError("unknown-strategy", "no strategy named '" + std::string(name) + "'");
}

const std::vector<StrategyId>& all_strategies() {
  static const std::vector<StrategyId> ids = [] {
    std::vector<StrategyId> out;
    for (std::size_t i = 0; i < kStrategyNames.size(); ++i) out.push_back(static_cast<StrategyId>(i));
    return out;
  }();
  return ids;
}

std::string_view to_string(Guarantee g) {
  switch (g) {
    case Guarantee::at_least_draw: return "at_least_draw";
    case Guarantee::win: return "win";
    case Guarantee::strong_win: return "strong_win";
  }
  return "?";
}

Guarantee parse_guarantee(std::string_view name) {
  for (auto g : {Guarantee::at_least_draw, Guarantee::win, Guarantee::strong_win})
    if (to_string(g) == name) return g;
  throw RuleError("unknown-guarantee", "no guarantee named '" + std::string(name) + "'");
}

std::string_view to_string(StrategyMode m) {
  return m == StrategyMode::paper_faithful ? "paper_faithful" : "repaired";
}

StrategyMode parse_strategy_mode(std::string_view name) {
  for (auto m : {StrategyMode::paper_faithful, StrategyMode::repaired})
    if (to_string(m) == name) return m;
  throw RuleError("unknown-mode", "no strategy mode named '" + std::string(name) + "'");
}

bool meets(Guarantee g, Player side, const Payoff& p) {
  const Payoff q = side == Player::lata ? p : -p;
  switch (g) {
    case Guarantee::at_least_draw: return q >= Payoff{};
    case Guarantee::win: return q > Payoff{};
    case Guarantee::strong_win: return q.territory_diff >= 2;
  }
  return false;
}

Player role(StrategyId id) { return script(id).role(); }

bool symmetry_safe(StrategyId id) { return script(id).equivariant(); }

std::optional<Guarantee> applicability(StrategyId id, const Graph& g, Budgets b, const RuleConfig& config) {
  return script(id).applicable(g, b, config);
}

StrategyContext::StrategyContext(StrategyId id, const GameState& initial, StrategyMode mode,
                                 std::optional<Guarantee> target)
    : id_(id), mode_(mode), graph_(initial.graph_ptr()), config_(initial.config()) {
  const Budgets b{initial.initial_budget(Player::lata), initial.initial_budget(Player::raj)};
  auto g = applicability(id, *graph_, b, config_);
  if (!g)
    throw RuleError("strategy-not-applicable", std::string(to_string(id)) + " makes no claim for budgets (" +
                                                   std::to_string(b.lata) + ", " + std::to_string(b.raj) +
                                                   ") on this board");
  target_ = target.value_or(*g);
}

Solver& StrategyContext::solver() {
  if (!solver_) solver_ = std::make_unique<Solver>(graph_, config_, natural_symmetry(*graph_));
  return *solver_;
}

StrategyMemory initial_memory(StrategyId id, const GameState& initial) {
  StrategyMemory m;
  m.names.assign(initial.graph().vertex_count(), 0);
  script(id).init(initial, m);
  return m;
}

Decision next_move(StrategyId id, const GameState& state, const StrategyMemory& memory, StrategyContext& ctx) {
  const Script& sc = script(id);
  if (state.is_terminal()) throw RuleError("game-over", "the game is already over");
  if (state.to_move() != sc.role())
    throw RuleError("not-strategy-turn", std::string(to_string(id)) + " plays " + to_string(sc.role()));

  Decision d;
  d.memory = memory;
  const auto legal = state.legal_moves();
  if (legal.size() == 1 && legal.front().is_pass()) {
    d.move = legal.front();
    return d;
  }
  if (memory.solver_mode) {
    d.move = ctx.solver().best_move(state);
    d.note = "solver";
    return d;
  }

  const bool repair = ctx.mode() == StrategyMode::repaired;
  try {
    d.move = sc.decide(state, d.memory, d.note);
  } catch (const Unspecified& e) {
    if (!repair) throw;
    d.memory = memory;
    d.memory.solver_mode = true;
    d.move = ctx.solver().best_move(state);
    d.note = std::string("repair: ") + e.what();
    d.repaired = true;
    return d;
  }
  if (const auto rule = state.violated_rule(d.move); !rule.empty())
    throw StrategyBug(std::string(to_string(id)) + " emitted illegal move " + to_string(d.move) + " (" + rule + ")");

  if (repair) {
    Solver& solver = ctx.solver();
    const Player side = sc.role();
    if (!meets(ctx.target(), side, solver.value(state.apply_unchecked(d.move))) &&
        meets(ctx.target(), side, solver.value(state))) {
      d.memory = memory;
      d.memory.solver_mode = true;
      const std::string scripted = to_string(d.move);
      d.move = solver.best_move(state);
      d.note = "repair: scripted " + scripted + (d.note.empty() ? "" : " [" + d.note + "]") + " loses the guarantee";
      d.repaired = true;
    }
  }
  return d;
}

StrategyMemory relabel(StrategyId id, const StrategyMemory& memory, const Move& observed, const GameState& before) {
  if (const auto rule = before.violated_rule(observed); !rule.empty())
    throw RuleError(rule, "observed move " + to_string(observed) + " is not legal");
  StrategyMemory m = memory;
  script(id).observe(m, observed, before);
  return m;
}

}  // namespace aggression
