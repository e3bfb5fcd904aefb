#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aggression/game.hpp"
#include "aggression/strategies.hpp"
#include "aggression/symmetry.hpp"

namespace aggression {

enum class VerificationStatus : std::uint8_t {
  holds,         // every opponent line ends meeting the guarantee
  refuted,       // some line ends below the guarantee; see counterexample
  unspecified,   // no refutation, but some lines reached uncovered situations
  strategy_bug,  // the script emitted an illegal move
};
std::string_view to_string(VerificationStatus s);
VerificationStatus parse_verification_status(std::string_view name);

struct UnspecifiedCase {
  std::string message;
  std::uint64_t count = 0;  // distinct positions that raised it
  bool operator==(const UnspecifiedCase&) const = default;
};

/// Observations about the script collected during verification.
struct Discrepancies {
  std::vector<std::string> failing_rows;     // table rows used on some failing line
  std::vector<std::string> ambiguous_rows;   // lookups where several rows disagreed
  std::vector<std::string> infeasible_rows;  // prescriptions exceeding Raj's troops
  std::vector<UnspecifiedCase> unspecified;
  std::vector<std::string> repairs;          // distinct repair notes (repaired mode)
  std::uint64_t repair_count = 0;
  bool operator==(const Discrepancies&) const = default;
};

struct VerificationReport {
  StrategyId strategy = StrategyId::raj_mirror_matching;
  Graph graph;
  Budgets budgets;
  RuleConfig config;
  StrategyMode mode = StrategyMode::paper_faithful;
  Guarantee guarantee_claimed = Guarantee::at_least_draw;
  SymmetryGroup symmetry_requested = SymmetryGroup::identity;
  SymmetryGroup symmetry_used = SymmetryGroup::identity;

  VerificationStatus status = VerificationStatus::holds;
  bool holds = false;
  std::optional<std::vector<Move>> counterexample;  // shortest failing line
  std::optional<Payoff> counterexample_payoff;
  std::string strategy_bug;                         // message when status is strategy_bug
  std::uint64_t unspecified_lines = 0;

  std::uint64_t lines_explored = 0;       // terminal positions reached
  std::uint64_t states_deduplicated = 0;  // positions answered from the memo
  std::uint64_t positions = 0;            // distinct positions expanded
  Discrepancies discrepancies;

  bool operator==(const VerificationReport&) const = default;
};

struct VerifyOptions {
  StrategyMode mode = StrategyMode::paper_faithful;
  RuleConfig config;
  std::optional<Guarantee> guarantee;  // defaults to the declared guarantee
  std::uint64_t max_positions = 0;     // 0 means unlimited
  double max_seconds = 0;              // 0 means unlimited
};

/// Plays the strategy against every legal opponent continuation.
///
/// Positions are memoized on (board, strategy memory); with a non-identity
/// group, positions equal up to a board automorphism that also maps the
/// script's vertex names are merged. Groups are only honoured for scripts
/// whose answers are equivariant; other scripts fall back to identity and
/// the report records the group actually used.
///
/// Throws RuleError("strategy-not-applicable") when the script makes no
/// claim for the inputs and LimitExceeded when a limit is hit.
VerificationReport verify_guarantee(StrategyId id, const Graph& graph, Budgets budgets,
                                    SymmetryGroup symmetry = SymmetryGroup::identity,
                                    const VerifyOptions& options = {});

/// Plays `line` from the initial position of the report and returns the
/// final payoff. Throws RuleError if the line is illegal or unfinished.
Payoff replay_line(const Graph& graph, Budgets budgets, const RuleConfig& config,
                   const std::vector<Move>& line);

}  // namespace aggression
