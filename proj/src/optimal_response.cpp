#include "aggression/optimal_response.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>
#include <string>

#include "aggression/errors.hpp"

namespace aggression {

namespace {

// Attacks only ever empty vertices, so the board is the initial placement
// minus a set of emptied vertices.
class Board {
 public:
  explicit Board(const ORInstance& in) : g_(in.graph), cells_(in.lata_placement.size()) {
    for (std::size_t v = 0; v < cells_.size(); ++v)
      cells_[v] = in.lata_placement[v] - in.raj_placement[v];
  }

  bool can_attack(Player attacker, Vertex v) const {
    const int c = cells_[v];
    if (c == 0 || (c > 0) == (attacker == Player::lata)) return false;
    int pressure = 0;
    for (Vertex u : g_.neighbors(v))
      if (cells_[u] != 0 && (cells_[u] > 0) == (attacker == Player::lata))
        pressure += cells_[u] < 0 ? -cells_[u] : cells_[u];
    return pressure > (c < 0 ? -c : c);
  }

  // Returns whether the attack landed.
  bool play(Player attacker, const PlannedAttack& target) {
    if (!target || !can_attack(attacker, *target)) return false;
    cells_[*target] = 0;
    return true;
  }

  void empty(Vertex v) { cells_[v] = 0; }
  std::int32_t cell(Vertex v) const { return cells_[v]; }
  std::size_t size() const { return cells_.size(); }

  Outcome score() const {
    std::array<int, 2> terr{}, troops{};
    for (int c : cells_) {
      if (c > 0) ++terr[0], troops[0] += c;
      if (c < 0) ++terr[1], troops[1] -= c;
    }
    return Outcome::from_counts(terr, troops);
  }

 private:
  const Graph& g_;
  std::vector<std::int32_t> cells_;
};

class Search {
 public:
  Search(const ORInstance& in, ORLimits limits) : in_(in), limits_(limits) {}

  bool run(Board& b, std::size_t round, std::vector<PlannedAttack>& tau) {
    if (limits_.max_nodes && nodes_ >= limits_.max_nodes)
      throw LimitExceeded("optimal-response node limit of " + std::to_string(limits_.max_nodes) +
                          " exceeded");
    ++nodes_;
    if (round >= in_.sigma.size()) return finish(b, tau);

    std::string key(b.size() + sizeof(round), '\0');
    for (std::size_t v = 0; v < b.size(); ++v) key[v] = b.cell(static_cast<Vertex>(v)) == 0 ? 1 : 0;
    std::memcpy(key.data() + b.size(), &round, sizeof(round));
    if (lost_.contains(key)) return false;

    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v) {
      if (!b.can_attack(Player::lata, v)) continue;
      Board next = b;
      next.empty(v);
      next.play(Player::raj, in_.sigma[round]);
      tau.push_back(v);
      if (run(next, round + 1, tau)) return true;
      tau.pop_back();
    }
    Board next = b;
    next.play(Player::raj, in_.sigma[round]);
    tau.push_back(std::nullopt);
    if (run(next, round + 1, tau)) return true;
    tau.pop_back();

    lost_.insert(std::move(key));
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // With Raj's script used up, Lata's troops never change, so attacking
  // every vulnerable Raj vertex is best and order does not matter.
  bool finish(Board& b, std::vector<PlannedAttack>& tau) {
    const std::size_t mark = tau.size();
    for (Vertex v = 0; v < static_cast<Vertex>(b.size()); ++v)
      if (b.play(Player::lata, v)) tau.push_back(v);
    if (b.score().result == Result::lata_win) return true;
    tau.resize(mark);
    return false;
  }

  const ORInstance& in_;
  ORLimits limits_;
  std::uint64_t nodes_ = 0;
  absl::flat_hash_set<std::string> lost_;
};

Outcome replay(const ORInstance& in, const std::vector<PlannedAttack>& tau) {
  Board b(in);
  const std::size_t rounds = std::max(tau.size(), in.sigma.size());
  for (std::size_t k = 0; k < rounds; ++k) {
    if (k < tau.size()) b.play(Player::lata, tau[k]);
    if (k < in.sigma.size()) b.play(Player::raj, in.sigma[k]);
  }
  return b.score();
}

void trim_trailing_skips(std::vector<PlannedAttack>& tau) {
  while (!tau.empty() && !tau.back()) tau.pop_back();
}

}  // namespace

int ORInstance::lata_total() const {
  return std::accumulate(lata_placement.begin(), lata_placement.end(), 0);
}

int ORInstance::raj_total() const {
  return std::accumulate(raj_placement.begin(), raj_placement.end(), 0);
}

void validate(const ORInstance& in) {
  const auto n = static_cast<std::size_t>(in.graph.vertex_count());
  if (in.lata_placement.size() != n || in.raj_placement.size() != n)
    throw RuleError("invalid-instance", "placements must list one troop count per vertex");
  for (std::size_t v = 0; v < n; ++v) {
    if (in.lata_placement[v] < 0 || in.raj_placement[v] < 0)
      throw RuleError("invalid-instance", "negative troop count on vertex " + std::to_string(v));
    if (in.lata_placement[v] > 0 && in.raj_placement[v] > 0)
      throw RuleError("invalid-instance", "vertex " + std::to_string(v) + " holds troops of both players");
  }
  for (Vertex v : in.sigma)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw RuleError("invalid-instance", "sigma entry " + std::to_string(v) + " is not a vertex");
}

Outcome simulate_response(const ORInstance& in, const std::vector<PlannedAttack>& tau) {
  validate(in);
  for (const auto& t : tau)
    if (t && (*t < 0 || *t >= in.graph.vertex_count()))
      throw RuleError("invalid-tau", "tau entry " + std::to_string(*t) + " is not a vertex");
  return replay(in, tau);
}

ORAnswer decide_optimal_response(const ORInstance& in, ORLimits limits) {
  validate(in);
  Board b(in);
  Search search(in, limits);
  std::vector<PlannedAttack> tau;
  ORAnswer a;
  a.decision = search.run(b, 0, tau);
  a.nodes = search.nodes();
  if (a.decision) {
    trim_trailing_skips(tau);
    a.witness_tau = std::move(tau);
  }
  return a;
}

ORAnswer brute_force_optimal_response(const ORInstance& in, std::uint64_t max_sequences) {
  validate(in);
  std::vector<PlannedAttack> alphabet{std::nullopt};
  for (Vertex v = 0; v < in.graph.vertex_count(); ++v)
    if (in.raj_placement[v] > 0) alphabet.push_back(v);
  const std::size_t length = in.sigma.size() + alphabet.size() - 1;

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (total > max_sequences / alphabet.size())
      throw LimitExceeded("brute-force optimal response exceeds " + std::to_string(max_sequences) +
                          " sequences");
    total *= alphabet.size();
  }

  ORAnswer a;
  std::vector<std::size_t> digits(length, 0);
  std::vector<PlannedAttack> tau(length);
  for (std::uint64_t i = 0; i < total; ++i) {
    for (std::size_t k = 0; k < length; ++k) tau[k] = alphabet[digits[k]];
    ++a.nodes;
    if (replay(in, tau).result == Result::lata_win) {
      a.decision = true;
      trim_trailing_skips(tau);
      a.witness_tau = tau;
      return a;
    }
    for (std::size_t k = length; k-- > 0;) {
      if (++digits[k] < alphabet.size()) break;
      digits[k] = 0;
    }
  }
  return a;
}

}  // namespace aggression
