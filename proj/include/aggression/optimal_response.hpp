#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aggression/game.hpp"
#include "aggression/graph.hpp"

namespace aggression {

/// One scripted attack: a target vertex, or empty for an explicit skip.
using PlannedAttack = std::optional<Vertex>;

/// A finished placement together with Raj's planned attack sequence.
struct ORInstance {
  Graph graph;
  std::vector<int> lata_placement;  // troops per vertex, 0 when absent
  std::vector<int> raj_placement;
  std::vector<Vertex> sigma;        // Raj's k-th attack targets sigma[k-1]

  int lata_total() const;
  int raj_total() const;
  bool operator==(const ORInstance&) const = default;
};

/// Throws RuleError("invalid-instance") on size mismatch, negative or
/// overlapping placements, or out-of-range sigma entries.
void validate(const ORInstance& instance);

struct ORAnswer {
  bool decision = false;
  std::optional<std::vector<PlannedAttack>> witness_tau;
  std::uint64_t nodes = 0;  // search nodes expanded
};

struct ORLimits {
  std::uint64_t max_nodes = 0;  // 0 means unlimited
};

/// Replays both scripts round by round, Lata first in each round. An entry
/// that is not a legal attack when its turn comes is a no-op. Replay stops
/// once both sequences are used up; the board is then scored.
/// Throws RuleError("invalid-tau") on an out-of-range vertex in tau.
Outcome simulate_response(const ORInstance& instance, const std::vector<PlannedAttack>& tau);

/// Exact decision: is there a tau after which Lata wins? Depth-first search
/// over Lata's legal attacks and skips, memoized on (board, round). Throws
/// LimitExceeded when the node limit is hit.
ORAnswer decide_optimal_response(const ORInstance& instance, ORLimits limits = {});

/// Reference decision by enumerating every tau over {skip} and Raj's
/// vertices, of length |sigma| + (number of Raj vertices). Intended for
/// instances of at most ten vertices; throws LimitExceeded past
/// `max_sequences` candidate sequences.
ORAnswer brute_force_optimal_response(const ORInstance& instance,
                                      std::uint64_t max_sequences = 50'000'000);

}  // namespace aggression
