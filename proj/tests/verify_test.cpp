#include <gtest/gtest.h>

#include <random>

#include "kft/connectivity.hpp"
#include "kft/constructors.hpp"
#include "kft/verify.hpp"
#include "test_support.hpp"

using namespace kft;
using namespace kft::testing;

namespace {

// Lexicographically least k-set S with no packing in G - S, by plain enumeration and the oracle.
std::optional<std::vector<Vertex>> oracle_least_counterexample(const Graph& g, const FTParams& params) {
  const std::size_t n = g.order(), k = params.k;
  if (k > n) return std::vector<Vertex>{};
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (pick[v]) s.push_back(v);
    auto rest = remove_vertices(g, VertexSet::from_range(n, s));
    if (!oracle_packing_exists(rest.graph, params.p, params.c)) return s;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

}  // namespace

TEST(VerifyFt, CompleteGraphK4) {
  auto v = verify_ft(complete_graph(4), {1, 1, 3});
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(v.counterexample);
  EXPECT_EQ(v.witness_count, 4u);
}

TEST(VerifyFt, FiveCycleForMatchings) { EXPECT_TRUE(verify_ft(cycle_graph(5), {1, 2, 2}).holds); }

TEST(VerifyFt, SevenCycleFailsAtVertexZero) {
  auto v = verify_ft(cycle_graph(7), {1, 2, 3});
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(*v.counterexample, (std::vector<Vertex>{0}));
}

TEST(VerifyFt, StarConstructionTwoTwoThree) {
  auto v = verify_ft(star_construction(2, 2, 3), {2, 2, 3});
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.witness_count, 28u);
}

TEST(VerifyFt, TooFewVerticesReportsOrder) {
  auto v = verify_ft(complete_graph(5), {1, 2, 3});
  EXPECT_FALSE(v.holds);
  EXPECT_NE(v.reason.find("5"), std::string::npos);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->size(), 1u);
}

TEST(VerifyFt, RejectsBadParameters) {
  EXPECT_THROW(verify_ft(complete_graph(4), {1, 0, 3}), InvalidArgument);
  EXPECT_THROW(verify_ft(complete_graph(4), {1, 1, 1}), InvalidArgument);
}

TEST(VerifyFt, RetainsRequestedWitnesses) {
  Graph g = star_construction(1, 2, 3);
  auto v = verify_ft(g, {1, 2, 3}, {1, 3});
  ASSERT_EQ(v.sample_witnesses.size(), 3u);
  for (const auto& [s, packing] : v.sample_witnesses) {
    ASSERT_EQ(s.size(), 1u);
    for (const auto& clique : packing.cliques)
      for (Vertex v2 : clique) EXPECT_NE(v2, s[0]);
    EXPECT_TRUE(is_valid_packing(g, packing, 2, 3));
  }
  EXPECT_TRUE(verify_ft(g, {1, 2, 3}).sample_witnesses.empty());
}

TEST(VerifyFt, ResultIndependentOfJobs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(9, 0.7, rng);
    FTParams params{2, 2, 3};
    auto one = verify_ft(g, params, {1, 0});
    for (std::size_t jobs : {2, 3, 8}) {
      auto many = verify_ft(g, params, {jobs, 0});
      EXPECT_EQ(many.holds, one.holds);
      EXPECT_EQ(many.counterexample, one.counterexample);
      EXPECT_EQ(many.witness_count, one.witness_count);
    }
  }
}

TEST(VerifyFt, AgreesWithOracleVerifier) {
  std::mt19937_64 rng(59);
  const FTParams grid[] = {{1, 1, 3}, {1, 2, 3}, {2, 1, 3}, {2, 2, 3}, {1, 2, 2}, {2, 2, 2}, {0, 2, 3}};
  int holds = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const FTParams& params = grid[trial % std::size(grid)];
    std::size_t n = params.order() + trial % 2;
    if (n > 8) n = 8;
    Graph g = random_graph(n, 0.6 + 0.1 * (trial % 4), rng);
    auto fast = verify_ft(g, params);
    auto slow = verify_ft_bruteforce(g, params);
    ASSERT_EQ(fast.holds, slow.holds) << params.to_string() << " trial " << trial;
    if (!fast.holds && fast.reason.empty()) {
      EXPECT_EQ(fast.counterexample, oracle_least_counterexample(g, params));
    }
    holds += fast.holds;
  }
  EXPECT_GT(holds, 20);
}

TEST(VerifyFt, AcceptedGraphsSatisfyStructuralConsequences) {
  std::mt19937_64 rng(61);
  int accepted = 0;
  const FTParams grid[] = {{1, 2, 3}, {2, 2, 3}, {1, 1, 4}, {1, 3, 3}};
  for (int trial = 0; trial < 400; ++trial) {
    const FTParams& params = grid[trial % std::size(grid)];
    Graph g = random_graph(params.order(), 0.75, rng);
    if (!verify_ft(g, params).holds) continue;
    ++accepted;
    EXPECT_GE(g.min_degree(), params.c + params.k - 1);
    EXPECT_GE(edge_connectivity(g), params.c + params.k - 1);
    EXPECT_GE(vertex_connectivity(g), params.k);
    for (Vertex v = 0; v < g.order(); ++v) {
      VertexSet nb = g.neighbors(v);
      EXPECT_TRUE(find_disjoint_cliques_within(g, nb, 1, params.c - 1)) << "vertex " << v << " in no c-clique";
    }
    // Smaller removal sets still leave a packing.
    for (std::size_t size = 0; size < params.k; ++size)
      for (int s = 0; s < 5; ++s) {
        VertexSet avail = VertexSet::full(g.order());
        auto perm = random_permutation(g.order(), rng);
        for (std::size_t i = 0; i < size; ++i) avail.erase(perm[i]);
        EXPECT_TRUE(find_disjoint_cliques_within(g, avail, params.p, params.c));
      }
  }
  EXPECT_GT(accepted, 10);
}

TEST(VerifyFt, WideGraphs) {
  Graph g = star_construction(1, 22, 3);  // 67 vertices
  EXPECT_TRUE(verify_ft(g, {1, 22, 3}).holds);
  GraphBuilder b(67);
  for (auto [u, v] : g.edges())
    if (!(u == 0 && v == 66)) b.add_edge(u, v);
  auto broken = verify_ft(std::move(b).build(), {1, 22, 3});
  EXPECT_FALSE(broken.holds);
  ASSERT_TRUE(broken.counterexample);
}

TEST(MinimumCandidate, StarAtKOneIsMinimum) {
  auto r = is_minimum_candidate(star_construction(1, 2, 3), {1, 2, 3});
  EXPECT_TRUE(r.candidate);
  EXPECT_TRUE(r.proven);
  EXPECT_EQ(r.bound, 12u);
}

TEST(MinimumCandidate, CompleteGraphExceedsBound) {
  auto r = is_minimum_candidate(complete_graph(7), {1, 2, 3});
  EXPECT_FALSE(r.candidate);
  EXPECT_NE(r.status.find("21"), std::string::npos);
}

TEST(MinimumCandidate, KTwoIsUnproven) {
  auto r = is_minimum_candidate(star_construction(2, 2, 3), {2, 2, 3});
  EXPECT_TRUE(r.candidate);
  EXPECT_FALSE(r.proven);
  EXPECT_EQ(r.status, "candidate at bound 19, minimality unproven");
}

TEST(EdgeBound, KnownValues) {
  EXPECT_EQ(best_known_edge_bound({1, 3, 4}).edges, 30u);
  EXPECT_EQ(best_known_edge_bound({1, 3, 2}).edges, 7u);
  EXPECT_TRUE(best_known_edge_bound({1, 3, 2}).proven);
  EXPECT_EQ(best_known_edge_bound({4, 1, 2}).edges, 15u);
  EXPECT_TRUE(best_known_edge_bound({4, 1, 2}).proven);
  EXPECT_FALSE(best_known_edge_bound({3, 1, 2}).proven);
}
