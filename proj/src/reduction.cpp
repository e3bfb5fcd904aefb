#include "aggression/reduction.hpp"

#include <algorithm>
#include <set>

#include "aggression/errors.hpp"

namespace aggression {

namespace {

std::string braces(const std::string& prefix, const std::string& inner) {
  return prefix + "_{" + inner + "}";
}

}  // namespace

void validate(const ColoredGraph& g) {
  if (g.k < 1 || g.n < 1) throw RuleError("invalid-colored-graph", "k and n must be positive");
  if (static_cast<int>(g.classes.size()) != g.k)
    throw RuleError("invalid-colored-graph", "expected " + std::to_string(g.k) + " classes");
  const int total = g.k * g.n;
  std::vector<bool> seen(total, false);
  for (const auto& cls : g.classes) {
    if (static_cast<int>(cls.size()) != g.n)
      throw RuleError("invalid-colored-graph", "every class must hold " + std::to_string(g.n) + " vertices");
    for (Vertex v : cls) {
      if (v < 0 || v >= total || seen[v])
        throw RuleError("invalid-colored-graph", "classes must partition 0.." + std::to_string(total - 1));
      seen[v] = true;
    }
  }
  std::set<Edge> distinct;
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= total || b >= total || a == b)
      throw RuleError("invalid-colored-graph", "bad edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    if (!distinct.insert(std::minmax(a, b)).second)
      throw RuleError("invalid-colored-graph", "duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

int reduction_z_size(int k, int n) { return (n - 1) * k - k * (k - 1) / 2 + 1; }

int reduction_lata_total(int k, int n, int m) { return k * (m + 1) + m + reduction_z_size(k, n); }

int reduction_raj_total(int k, int n, int m) { return m * n * k; }

ReductionOutput reduce_mcc(const ColoredGraph& g, const ReduceOptions& options) {
  validate(g);
  if (g.n <= g.k + 2)
    throw RuleError("classes-too-small", "need n > k + 2 (got n=" + std::to_string(g.n) +
                                             ", k=" + std::to_string(g.k) +
                                             "); pad each class with isolated vertices");
  const int k = g.k, n = g.n, m = static_cast<int>(g.edges.size());
  const int z = reduction_z_size(k, n);

  ReductionOutput out;
  out.params = {k, n, m};

  // Position of every input vertex inside its class.
  std::vector<Vertex> image(k * n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) image[g.classes[i][j]] = i * n + j;

  const Vertex w0 = k * n, g0 = w0 + m, z0 = g0 + k;
  int count = z0 + z;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      out.name_map[braces("u", std::to_string(i + 1) + "," + std::to_string(j + 1))] = i * n + j;
      edges.emplace_back(g0 + i, i * n + j);
    }
  for (int t = 0; t < m; ++t) {
    out.name_map[braces("w", std::to_string(t + 1))] = w0 + t;
    edges.emplace_back(w0 + t, image[g.edges[t].first]);
    edges.emplace_back(w0 + t, image[g.edges[t].second]);
  }
  for (int i = 0; i < k; ++i) out.name_map[braces("g", std::to_string(i + 1))] = g0 + i;
  for (int t = 0; t < z; ++t) out.name_map[braces("z", std::to_string(t + 1))] = z0 + t;

  std::vector<int> lata(count, 0), raj(count, 0);
  for (int v = 0; v < k * n; ++v) raj[v] = m;
  for (int t = 0; t < m; ++t) lata[w0 + t] = 1;
  for (int i = 0; i < k; ++i) lata[g0 + i] = m + 1;
  for (int t = 0; t < z; ++t) lata[z0 + t] = 1;

  if (options.equalize_budgets) {
    for (int t = 0; t < z; ++t) edges.emplace_back(g0, z0 + t);
    const int tl = reduction_lata_total(k, n, m), tr = reduction_raj_total(k, n, m);
    if (tr > tl) {
      lata[z0] += tr - tl;
    } else if (tl > tr) {
      const Vertex x = count++, y = count++;
      out.name_map["x"] = x;
      out.name_map["y"] = y;
      lata.push_back(1);
      raj.push_back(0);
      lata.push_back(0);
      raj.push_back(tl - tr + 1);
      edges.emplace_back(g0, x);
      edges.emplace_back(x, y);
    }
  }

  out.instance.graph = Graph(count, std::move(edges));
  out.instance.lata_placement = std::move(lata);
  out.instance.raj_placement = std::move(raj);
  for (int i = 0; i < k; ++i) out.instance.sigma.push_back(g0 + i);
  for (int t = 0; t < m; ++t) out.instance.sigma.push_back(w0 + t);
  return out;
}

std::optional<std::vector<Vertex>> brute_force_mcc(const ColoredGraph& g, std::uint64_t max_choices) {
  validate(g);
  std::uint64_t total = 1;
  for (int i = 0; i < g.k; ++i) {
    if (total > max_choices / static_cast<std::uint64_t>(g.n))
      throw LimitExceeded("multi-colored clique search exceeds " + std::to_string(max_choices) + " choices");
    total *= g.n;
  }
  std::set<Edge> adjacent;
  for (auto [a, b] : g.edges) adjacent.insert(std::minmax(a, b));

  std::vector<int> pick(g.k, 0);
  std::vector<Vertex> chosen(g.k);
  for (std::uint64_t c = 0; c < total; ++c) {
    bool clique = true;
    for (int i = 0; i < g.k && clique; ++i) {
      chosen[i] = g.classes[i][pick[i]];
      for (int j = 0; j < i && clique; ++j) clique = adjacent.contains(std::minmax(chosen[i], chosen[j]));
    }
    if (clique) return chosen;
    for (int i = g.k; i-- > 0;) {
      if (++pick[i] < g.n) break;
      pick[i] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace aggression
