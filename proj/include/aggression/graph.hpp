#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aggression {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..vertex_count()-1.
///
/// Edges are normalized to (min, max) and kept sorted, so two graphs with the
/// same edge set compare equal regardless of construction order.
class Graph {
 public:
  Graph() = default;
  /// Throws RuleError on self-loops, duplicates and out-of-range ids.
  Graph(std::int32_t vertex_count, std::vector<Edge> edges);

  std::int32_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::int32_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex a, Vertex b) const;

  /// Image of this graph under `perm`, where perm[old] = new.
  Graph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::int32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// Partner map when every vertex has degree exactly one.
std::optional<std::vector<Vertex>> perfect_matching_partners(const Graph& g);

/// Vertices in cyclic order (starting at 0, then its lower neighbour) when the
/// graph is a single cycle on all vertices.
std::optional<std::vector<Vertex>> cycle_order(const Graph& g);

/// Vertices in path order starting at the lower-id endpoint when the graph is
/// a single simple path on all vertices (one vertex counts as a path).
std::optional<std::vector<Vertex>> path_order(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace aggression
