#include <gtest/gtest.h>

#include <random>

#include "aggression/codec.hpp"
#include "aggression/errors.hpp"
#include "aggression/graph.hpp"
#include "aggression/reduction.hpp"

using namespace aggression;

namespace {

ColoredGraph colored(int k, int n, std::vector<Edge> edges) {
  ColoredGraph g{k, n, {}, std::move(edges)};
  for (int i = 0; i < k; ++i) {
    g.classes.emplace_back();
    for (int j = 0; j < n; ++j) g.classes.back().push_back(i * n + j);
  }
  return g;
}

ColoredGraph planted() {
  return colored(3, 6, {{0, 6}, {6, 12}, {0, 12}, {1, 7}, {2, 8}, {3, 13}, {4, 14}, {9, 15}, {5, 11}});
}

// Random colored graph whose edges only join different classes.
ColoredGraph random_colored(std::mt19937& rng, int k, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution keep(p);
  for (Vertex a = 0; a < k * n; ++a)
    for (Vertex b = a + 1; b < k * n; ++b)
      if (a / n != b / n && keep(rng)) edges.push_back({a, b});
  return colored(k, n, edges);
}

void audit(const ColoredGraph& g, const ReductionOutput& r) {
  const Graph& h = r.instance.graph;
  const int k = g.k, n = g.n, m = static_cast<int>(g.edges.size());
  EXPECT_TRUE(is_bipartite(h));
  EXPECT_EQ(r.params, (ReductionParams{k, n, m}));
  EXPECT_EQ(r.instance.lata_total(), reduction_lata_total(k, n, m));
  EXPECT_EQ(r.instance.raj_total(), reduction_raj_total(k, n, m));
  EXPECT_EQ(h.vertex_count(), k * n + m + k + reduction_z_size(k, n));
  std::vector<int> edge_count(k * n, 0);
  for (const Edge& e : g.edges) {
    ++edge_count[e.first];
    ++edge_count[e.second];
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      const Vertex u = r.name_map.at("u_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
      EXPECT_EQ(u, i * n + j);
      EXPECT_EQ(h.degree(u), 1 + edge_count[g.classes[i][j]]);
      EXPECT_EQ(r.instance.raj_placement[u], m);
      EXPECT_TRUE(h.adjacent(u, r.name_map.at("g_{" + std::to_string(i + 1) + "}")));
    }
  for (int t = 1; t <= reduction_z_size(k, n); ++t) {
    const Vertex z = r.name_map.at("z_{" + std::to_string(t) + "}");
    EXPECT_EQ(h.degree(z), 0);
    EXPECT_EQ(r.instance.lata_placement[z], 1);
  }
  for (int t = 1; t <= m; ++t) {
    const Vertex w = r.name_map.at("w_{" + std::to_string(t) + "}");
    EXPECT_EQ(h.degree(w), 2);
    EXPECT_EQ(r.instance.sigma[k + t - 1], w);
  }
  for (int i = 1; i <= k; ++i) {
    const Vertex gi = r.name_map.at("g_{" + std::to_string(i) + "}");
    EXPECT_EQ(r.instance.lata_placement[gi], m + 1);
    EXPECT_EQ(r.instance.sigma[i - 1], gi);
  }
  EXPECT_EQ(r.instance.sigma.size(), static_cast<std::size_t>(k + m));
}

}  // namespace

TEST(Reduction, Formulas) {
  EXPECT_EQ(reduction_z_size(3, 6), 13);
  EXPECT_EQ(reduction_lata_total(3, 6, 9), 52);
  EXPECT_EQ(reduction_raj_total(3, 6, 9), 162);
  EXPECT_EQ(reduction_z_size(1, 4), 4);
}

TEST(Reduction, PlantedShape) {
  const ColoredGraph g = planted();
  const ReductionOutput r = reduce_mcc(g);
  EXPECT_EQ(r.instance.graph.vertex_count(), 43);
  EXPECT_EQ(r.instance.sigma.size(), 12u);
  audit(g, r);
}

TEST(Reduction, SmallestShape) {
  const ReductionOutput r = reduce_mcc(colored(1, 4, {}));
  EXPECT_EQ(r.instance.graph.vertex_count(), 9);
  EXPECT_EQ(r.instance.sigma, (std::vector<Vertex>{r.name_map.at("g_{1}")}));
}

TEST(Reduction, Rejections) {
  EXPECT_THROW(reduce_mcc(colored(3, 5, {})), RuleError);
  try {
    reduce_mcc(colored(2, 4, {}));
    FAIL();
  } catch (const RuleError& e) {
    EXPECT_EQ(e.rule(), "classes-too-small");
  }
  EXPECT_THROW(validate(colored(2, 4, {{0, 0}})), RuleError);
  EXPECT_THROW(validate(colored(2, 4, {{0, 9}})), RuleError);
  EXPECT_THROW(validate(colored(2, 4, {{0, 5}, {5, 0}})), RuleError);
  ColoredGraph broken = colored(2, 4, {});
  broken.classes[1][0] = 0;
  EXPECT_THROW(validate(broken), RuleError);
}

TEST(Reduction, BruteForceClique) {
  const auto found = brute_force_mcc(planted());
  ASSERT_TRUE(found);
  EXPECT_EQ(*found, (std::vector<Vertex>{0, 6, 12}));
  EXPECT_FALSE(brute_force_mcc(colored(2, 3, {})));
  const auto single = brute_force_mcc(colored(1, 3, {}));
  ASSERT_TRUE(single);
  EXPECT_EQ(single->size(), 1u);
  EXPECT_THROW(brute_force_mcc(colored(4, 10, {}), 100), LimitExceeded);
}

TEST(Reduction, EquivalenceOnRandomGraphs) {
  std::mt19937 rng(99);
  int yes = 0, total = 0;
  for (int k = 1; k <= 3; ++k)
    for (int trial = 0; trial < 12; ++trial) {
      const int n = k + 3;
      const ColoredGraph g = random_colored(rng, k, n, k == 3 ? 0.2 : 0.3);
      const ReductionOutput r = reduce_mcc(g);
      audit(g, r);
      const bool clique = brute_force_mcc(g).has_value();
      const ORAnswer a = decide_optimal_response(r.instance, {5'000'000});
      EXPECT_EQ(a.decision, clique) << serialize_instance(r.instance);
      yes += clique;
      ++total;
    }
  EXPECT_GT(yes, 0);
  EXPECT_LT(yes, total);
}

TEST(Reduction, EqualizedBudgets) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const ColoredGraph g = trial == 0 ? planted() : random_colored(rng, 2, 5, 0.25);
    const ReductionOutput r = reduce_mcc(g, {true});
    EXPECT_EQ(r.instance.lata_total(), r.instance.raj_total());
    EXPECT_TRUE(is_bipartite(r.instance.graph));
    EXPECT_EQ(decide_optimal_response(r.instance, {5'000'000}).decision, brute_force_mcc(g).has_value());
  }
  const ReductionOutput p = reduce_mcc(planted(), {true});
  EXPECT_EQ(p.instance.lata_total(), 162);
}
