#include "aggression/graph.hpp"

#include <algorithm>
#include <numeric>

#include "aggression/errors.hpp"

namespace aggression {

Graph::Graph(std::int32_t vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw RuleError("vertex-count", "vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw RuleError("vertex-out-of-range", "edge [" + std::to_string(u) + "," +
                                                 std::to_string(v) + "] leaves 0.." +
                                                 std::to_string(n_ - 1));
    }
    if (u == v) throw RuleError("self-loop", "edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw RuleError("duplicate-edge",
                    "edge [" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "]");
  }
  edges_ = std::move(edges);

  std::vector<std::int32_t> deg(n_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.assign(offsets_[n_], 0);
  std::vector<std::int32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n_; ++v) std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return Graph(n_, std::move(e));
}

std::optional<std::vector<Vertex>> perfect_matching_partners(const Graph& g) {
  std::vector<Vertex> partner(g.vertex_count(), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 1) return std::nullopt;
    partner[v] = g.neighbors(v)[0];
  }
  return partner;
}

std::optional<std::vector<Vertex>> cycle_order(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || static_cast<int>(g.edge_count()) != n) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  std::vector<Vertex> order{0};
  Vertex prev = 0, cur = g.neighbors(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

std::optional<std::vector<Vertex>> path_order(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || static_cast<int>(g.edge_count()) != n - 1) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  Vertex start = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 2 || g.degree(v) == 0) return std::nullopt;
    if (g.degree(v) == 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  std::vector<Vertex> order{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (w != prev) next = w;
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace aggression
