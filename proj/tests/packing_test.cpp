#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "kft/constructors.hpp"
#include "kft/packing.hpp"
#include "test_support.hpp"

using namespace kft;
using namespace kft::testing;

TEST(FindDisjointCliques, TwoTriangles) {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto packing = find_disjoint_cliques(g, 2, 3);
  ASSERT_TRUE(packing);
  EXPECT_EQ(packing->cliques, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(FindDisjointCliques, TriangleFreeHasNone) {
  EXPECT_FALSE(find_disjoint_cliques(cycle_graph(6), 2, 3));
  EXPECT_FALSE(oracle_packing_exists(cycle_graph(6), 2, 3));
}

TEST(FindDisjointCliques, StarWithoutHub) {
  auto rest = remove_vertices(star_construction(1, 2, 3), VertexSet(7, {0}));
  auto packing = find_disjoint_cliques(rest.graph, 2, 3);
  ASSERT_TRUE(packing);
  EXPECT_TRUE(oracle_packing_exists(rest.graph, 2, 3));
  EXPECT_EQ(packing->cliques, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}}));
  // Translate back: exactly the constructor's two triangles.
  std::vector<Vertex> first, second;
  for (Vertex v : packing->cliques[0]) first.push_back(rest.original_label[v]);
  for (Vertex v : packing->cliques[1]) second.push_back(rest.original_label[v]);
  EXPECT_EQ(first, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(second, (std::vector<Vertex>{4, 5, 6}));
}

TEST(FindDisjointCliques, RejectsBadParameters) {
  Graph g = complete_graph(4);
  EXPECT_THROW(find_disjoint_cliques(g, 0, 3), InvalidArgument);
  EXPECT_THROW(find_disjoint_cliques(g, 1, 1), InvalidArgument);
  EXPECT_THROW(oracle_packing_exists(g, 0, 3), InvalidArgument);
}

TEST(Oracle, KnownInstances) {
  EXPECT_TRUE(oracle_packing_exists(complete_graph(6), 2, 3));
  EXPECT_FALSE(oracle_packing_exists(cycle_graph(7), 2, 3));
  EXPECT_FALSE(oracle_packing_exists(petersen(), 1, 3));
  EXPECT_FALSE(find_disjoint_cliques(petersen(), 1, 3));
  EXPECT_THROW(oracle_packing_exists(complete_graph(40), 5, 4, 1000), LimitExceeded);
}

TEST(FindDisjointCliques, AgreesWithOracleUpToNineVertices) {
  std::mt19937_64 rng(41);
  int positives = 0, total = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + trial % 8;
    Graph g = random_graph(n, 0.35 + 0.1 * (trial % 6), rng);
    for (std::size_t c = 2; c <= n; ++c)
      for (std::size_t p = 1; p * c <= n; ++p) {
        auto packing = find_disjoint_cliques(g, p, c);
        bool truth = oracle_packing_exists(g, p, c);
        EXPECT_EQ(packing.has_value(), truth) << "n=" << n << " p=" << p << " c=" << c;
        if (packing) {
          EXPECT_TRUE(is_valid_packing(g, *packing, p, c));
          ++positives;
        }
        ++total;
      }
  }
  EXPECT_GT(positives, total / 5);
  EXPECT_LT(positives, total);
}

TEST(FindDisjointCliques, StructuredInstancesAgreeWithOracle) {
  std::vector<Graph> corpus{star_construction(1, 2, 3), star_construction(2, 2, 3), star_construction(0, 3, 3),
                            cycle_graph(9), complete_graph(9), petersen(), harary(4, 9)};
  for (const auto& g : corpus)
    for (std::size_t c = 2; c <= 4; ++c)
      for (std::size_t p = 1; p * c <= std::min<std::size_t>(g.order(), 9); ++p) {
        if (binomial(binomial(g.order(), c), p) > 2'000'000) continue;
        EXPECT_EQ(find_disjoint_cliques(g, p, c).has_value(), oracle_packing_exists(g, p, c));
      }
}

TEST(FindDisjointCliques, PerfectMatchingOnOddCyclesIsFast) {
  auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 3; n <= 13; n += 2) {
    Graph g = cycle_graph(n);
    EXPECT_TRUE(find_disjoint_cliques(g, n / 2, 2));
    EXPECT_FALSE(find_disjoint_cliques(g, n / 2 + 1, 2));
    for (Vertex v = 0; v < n; ++v) {
      VertexSet avail = VertexSet::full(n);
      avail.erase(v);
      EXPECT_TRUE(find_disjoint_cliques_within(g, avail, n / 2, 2));
    }
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
}

TEST(FindDisjointCliques, WideGraphsUseDynamicSets) {
  Graph g = star_construction(2, 25, 3);  // 77 vertices
  auto packing = find_disjoint_cliques(g, 25, 3);
  ASSERT_TRUE(packing);
  EXPECT_TRUE(is_valid_packing(g, *packing, 25, 3));
  EXPECT_FALSE(find_disjoint_cliques(g, 26, 3));
}

TEST(FindDisjointCliques, MonotoneUnderShrinkingRemovalSets) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(9, 0.6, rng);
    VertexSet s(9);
    for (Vertex v = 0; v < 9; ++v)
      if (rng() % 4 == 0) s.insert(v);
    VertexSet avail = VertexSet::full(9) - s;
    auto packing = find_disjoint_cliques_within(g, avail, 2, 3);
    if (!packing) continue;
    // Any subset S' of S leaves a superset of the available vertices; the same packing must be usable.
    for (Vertex drop = 0; drop < 9; ++drop) {
      if (!s.contains(drop)) continue;
      VertexSet wider = avail;
      wider.insert(drop);
      for (const auto& clique : packing->cliques)
        for (Vertex v : clique) EXPECT_TRUE(wider.contains(v));
      EXPECT_TRUE(is_valid_packing(g, *packing, 2, 3));
      EXPECT_TRUE(find_disjoint_cliques_within(g, wider, 2, 3));
    }
  }
}

TEST(IsValidPacking, RejectsBrokenPackings) {
  Graph g = complete_graph(6);
  EXPECT_TRUE(is_valid_packing(g, CliquePacking{{{0, 1, 2}, {3, 4, 5}}}, 2, 3));
  EXPECT_FALSE(is_valid_packing(g, CliquePacking{{{0, 1, 2}, {2, 4, 5}}}, 2, 3));
  EXPECT_FALSE(is_valid_packing(g, CliquePacking{{{0, 1, 2}}}, 2, 3));
  EXPECT_FALSE(is_valid_packing(cycle_graph(6), CliquePacking{{{0, 1, 2}, {3, 4, 5}}}, 2, 3));
}
