#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aggression/graph.hpp"
#include "aggression/optimal_response.hpp"

namespace aggression {

/// A graph whose vertices 0..k*n-1 are split into k color classes of n each.
struct ColoredGraph {
  int k = 0;
  int n = 0;
  std::vector<std::vector<Vertex>> classes;  // classes[i][j] is the j-th vertex of class i
  std::vector<Edge> edges;                   // input order is kept

  bool operator==(const ColoredGraph&) const = default;
};

/// Throws RuleError("invalid-colored-graph") unless the classes partition
/// 0..k*n-1 into k lists of n and the edges are distinct non-loop pairs.
void validate(const ColoredGraph& g);

struct ReductionParams {
  int k = 0;
  int n = 0;
  int m = 0;
  bool operator==(const ReductionParams&) const = default;
};

struct ReductionOutput {
  ORInstance instance;
  std::map<std::string, Vertex> name_map;  // "u_{i,j}", "w_{t}", "g_{i}", "z_{t}", 1-based
  ReductionParams params;
};

struct ReduceOptions {
  /// Attach Z to g_1 and pad troops so both players hold the same total.
  /// When Raj holds more, z_1 gets the difference. When Lata holds more, a
  /// new Raj vertex "y" with the difference plus one faces a new one-troop
  /// Lata vertex "x" hung from g_1. Neither new vertex can change hands under
  /// the planned attacks, and Raj still wins every territory tie on troops,
  /// so the answer is unchanged.
  bool equalize_budgets = false;
};

/// Builds the Optimal Response instance for a Multi-Colored Clique input.
///
/// Vertex ids: the u_{i,j} class-major, then w_t in edge order, then the
/// guards g_i, then Z. Troops: g_i gets m+1, every w_t and z_t gets 1 for
/// Lata, every u_{i,j} gets m for Raj. sigma = g_1..g_k, w_1..w_m.
/// Throws RuleError("classes-too-small") when n <= k + 2; pad the classes
/// with isolated vertices first.
ReductionOutput reduce_mcc(const ColoredGraph& g, const ReduceOptions& options = {});

/// |Z| = (n-1)k - C(k,2) + 1.
int reduction_z_size(int k, int n);
/// Lata's total k(m+1) + m + |Z| and Raj's total mnk.
int reduction_lata_total(int k, int n, int m);
int reduction_raj_total(int k, int n, int m);

/// One vertex per class inducing a clique, or empty. Enumerates all n^k
/// choices; throws LimitExceeded past `max_choices`.
std::optional<std::vector<Vertex>> brute_force_mcc(const ColoredGraph& g,
                                                   std::uint64_t max_choices = 100'000'000);

}  // namespace aggression
