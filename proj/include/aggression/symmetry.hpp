#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aggression/game.hpp"
#include "aggression/graph.hpp"

namespace aggression {

enum class SymmetryGroup : std::uint8_t {
  identity,
  matching_edges,  // permute edges, swap endpoints; needs a perfect matching
  cycle_dihedral,  // rotations and reflections; needs a single cycle
};

std::string to_string(SymmetryGroup g);
SymmetryGroup parse_symmetry(std::string_view name);

/// True when every permutation in the group is an automorphism of g.
bool symmetry_sound(const Graph& g, SymmetryGroup group);

/// Richest sound group for the graph: matching_edges, then cycle_dihedral,
/// else identity.
SymmetryGroup natural_symmetry(const Graph& g);

struct CanonicalKey {
  std::string bytes;
  bool operator==(const CanonicalKey&) const = default;
  template <class H>
  friend H AbslHashValue(H h, const CanonicalKey& k) {
    return H::combine(std::move(h), k.bytes);
  }
};

/// Minimal representative of a per-vertex labelling under a symmetry group.
class Canonicalizer {
 public:
  /// Throws RuleError("unsound-symmetry") when the group does not act on g.
  Canonicalizer(const Graph& g, SymmetryGroup group);

  SymmetryGroup group() const { return group_; }

  /// Appends the canonical label sequence to `out` (4 bytes per label).
  void encode(std::span<const std::int32_t> labels, std::string& out) const;

  /// Canonical label sequence itself.
  std::vector<std::int32_t> canonical_labels(std::span<const std::int32_t> labels) const;

 private:
  SymmetryGroup group_;
  std::vector<Edge> edges_;      // matching_edges
  std::vector<Vertex> cycle_;    // cycle_dihedral
};

/// Appends budgets, phase, mover, first passer and pass counters.
void append_scalars(const GameState& s, std::string& out);

CanonicalKey canonical_key(const GameState& s, SymmetryGroup group);

}  // namespace aggression
