#include "aggression/symmetry.hpp"

#include <algorithm>

#include "aggression/errors.hpp"

namespace aggression {

std::string to_string(SymmetryGroup g) {
  switch (g) {
    case SymmetryGroup::identity: return "identity";
    case SymmetryGroup::matching_edges: return "matching_edges";
    case SymmetryGroup::cycle_dihedral: return "cycle_dihedral";
  }
  return "?";
}

SymmetryGroup parse_symmetry(std::string_view name) {
  for (auto g : {SymmetryGroup::identity, SymmetryGroup::matching_edges, SymmetryGroup::cycle_dihedral})
    if (name == to_string(g)) return g;
  throw RuleError("symmetry", "unknown symmetry group '" + std::string(name) + "'");
}

bool symmetry_sound(const Graph& g, SymmetryGroup group) {
  switch (group) {
    case SymmetryGroup::identity: return true;
    case SymmetryGroup::matching_edges: return perfect_matching_partners(g).has_value();
    case SymmetryGroup::cycle_dihedral: return cycle_order(g).has_value();
  }
  return false;
}

SymmetryGroup natural_symmetry(const Graph& g) {
  if (g.vertex_count() > 0 && symmetry_sound(g, SymmetryGroup::matching_edges))
    return SymmetryGroup::matching_edges;
  if (symmetry_sound(g, SymmetryGroup::cycle_dihedral)) return SymmetryGroup::cycle_dihedral;
  return SymmetryGroup::identity;
}

Canonicalizer::Canonicalizer(const Graph& g, SymmetryGroup group) : group_(group) {
  if (!symmetry_sound(g, group))
    throw RuleError("unsound-symmetry", to_string(group) + " is not a symmetry of this graph");
  if (group == SymmetryGroup::matching_edges) edges_ = g.edges();
  if (group == SymmetryGroup::cycle_dihedral) cycle_ = *cycle_order(g);
}

std::vector<std::int32_t> Canonicalizer::canonical_labels(std::span<const std::int32_t> labels) const {
  std::vector<std::int32_t> out;
  switch (group_) {
    case SymmetryGroup::identity:
      out.assign(labels.begin(), labels.end());
      break;
    case SymmetryGroup::matching_edges: {
      std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
      pairs.reserve(edges_.size());
      for (auto [u, v] : edges_) pairs.emplace_back(std::minmax(labels[u], labels[v]));
      std::sort(pairs.begin(), pairs.end());
      for (auto [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
      }
      break;
    }
    case SymmetryGroup::cycle_dihedral: {
      const int n = static_cast<int>(cycle_.size());
      std::vector<std::int32_t> cand(n);
      for (int dir : {1, -1}) {
        for (int r = 0; r < n; ++r) {
          for (int i = 0; i < n; ++i) cand[i] = labels[cycle_[((r + dir * i) % n + n) % n]];
          if (out.empty() || cand < out) out = cand;
        }
      }
      break;
    }
  }
  return out;
}

void Canonicalizer::encode(std::span<const std::int32_t> labels, std::string& out) const {
  for (auto x : canonical_labels(labels)) {
    const auto u = static_cast<std::uint32_t>(x);
    out.push_back(static_cast<char>(u >> 24));
    out.push_back(static_cast<char>(u >> 16));
    out.push_back(static_cast<char>(u >> 8));
    out.push_back(static_cast<char>(u));
  }
}

void append_scalars(const GameState& s, std::string& out) {
  for (auto p : {Player::lata, Player::raj}) {
    const auto b = static_cast<std::uint32_t>(s.budget_remaining(p));
    out.push_back(static_cast<char>(b >> 24));
    out.push_back(static_cast<char>(b >> 16));
    out.push_back(static_cast<char>(b >> 8));
    out.push_back(static_cast<char>(b));
  }
  const int fp = s.first_passer() ? 1 + index(*s.first_passer()) : 0;
  out.push_back(static_cast<char>(static_cast<int>(s.phase()) | (index(s.to_move()) << 2) | (fp << 3) |
                                  (s.consecutive_placement_passes() << 5)));
  out.push_back(static_cast<char>(s.consecutive_attack_passes()));
}

CanonicalKey canonical_key(const GameState& s, SymmetryGroup group) {
  Canonicalizer c(s.graph(), group);
  CanonicalKey k;
  c.encode({s.cells().data(), s.cells().size()}, k.bytes);
  append_scalars(s, k.bytes);
  return k;
}

}  // namespace aggression
