#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>

#include "kft/blocks.hpp"
#include "kft/canonical.hpp"
#include "kft/chordal.hpp"
#include "kft/connectivity.hpp"
#include "kft/constructors.hpp"
#include "kft/graph.hpp"
#include "test_support.hpp"

using namespace kft;
using namespace kft::testing;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<Vertex> vs) { return VertexSet(g.order(), vs); }

}  // namespace

TEST(VertexSet, SmallAndDynamicAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::uint64_t> bits;
    std::uint64_t a = bits(rng), b = bits(rng);
    SmallSet sa(a), sb(b);
    VertexSet da = VertexSet::from_small(64, sa), db = VertexSet::from_small(64, sb);
    EXPECT_EQ((da & db).to_small(), sa & sb);
    EXPECT_EQ((da | db).to_small(), sa | sb);
    EXPECT_EQ((da - db).to_small(), sa - sb);
    EXPECT_EQ(da.count(), sa.count());
    EXPECT_EQ(da.first(), sa.first());
    for (Vertex v : {0, 5, 31, 62, 63}) {
      EXPECT_EQ(da.next(v), sa.next(v));
      EXPECT_EQ(da.above(v).to_small(), sa.above(v));
    }
  }
  VertexSet wide(130, {0, 64, 129});
  EXPECT_EQ(wide.count(), 3u);
  EXPECT_EQ(wide.next(64), 129u);
  EXPECT_EQ(VertexSet::full(130).count(), 130u);
}

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
  Graph g = complete_graph(3);
  EXPECT_THROW(g.neighbors(3), InvalidArgument);
}

TEST(Graph, DegreeSumIsTwiceEdgeCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(12, 0.4, rng);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      g.neighbors(v).for_each([&](Vertex u) { EXPECT_TRUE(g.has_edge(u, v)); });
      EXPECT_FALSE(g.has_edge(v, v));
    }
    EXPECT_EQ(sum, 2 * g.size());
  }
}

TEST(Neighborhoods, Definitions) {
  Graph tri = complete_graph(3);
  EXPECT_EQ(open_neighborhood(tri, 0).to_vector(), (std::vector<Vertex>{1, 2}));

  Graph path = path_graph(3);
  EXPECT_EQ(closed_neighborhood(path, set_of(path, {0, 2})).to_vector(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(open_neighborhood(path, set_of(path, {0, 2})).to_vector(), (std::vector<Vertex>{1}));
  EXPECT_EQ(closed_neighborhood(path, 1).to_vector(), (std::vector<Vertex>{0, 1, 2}));

  // Hub of the star construction sees every other vertex.
  Graph star = star_construction(1, 2, 3);
  EXPECT_EQ(open_neighborhood(star, 0).to_vector(), (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));
  EXPECT_THROW(open_neighborhood(star, 7), InvalidArgument);
}

TEST(RemoveVertices, RelabelsAscending) {
  auto k3 = remove_vertices(complete_graph(4), VertexSet(4, {2}));
  EXPECT_EQ(k3.graph, complete_graph(3));
  EXPECT_EQ(k3.original_label, (std::vector<Vertex>{0, 1, 3}));

  auto p4 = remove_vertices(cycle_graph(5), VertexSet(5, {0}));
  EXPECT_EQ(p4.graph, path_graph(4));

  Graph star = star_construction(1, 2, 3);
  auto rest = remove_vertices(star, VertexSet(7, {0}));
  auto comps = components(rest.graph);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].to_vector(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(comps[1].to_vector(), (std::vector<Vertex>{3, 4, 5}));
  EXPECT_TRUE(rest.graph.is_clique(comps[0]));
  EXPECT_TRUE(rest.graph.is_clique(comps[1]));
}

TEST(RemoveVertices, EdgesAreExactlyThoseAvoidingS) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(10, 0.5, rng);
    VertexSet s(10);
    for (Vertex v = 0; v < 10; ++v)
      if (rng() % 3 == 0) s.insert(v);
    auto r = remove_vertices(g, s);
    std::size_t expected = 0;
    for (auto [u, v] : g.edges()) expected += (!s.contains(u) && !s.contains(v)) ? 1 : 0;
    EXPECT_EQ(r.graph.size(), expected);
    for (auto [u, v] : r.graph.edges()) EXPECT_TRUE(g.has_edge(r.original_label[u], r.original_label[v]));
  }
}

TEST(Connectivity, KnownValues) {
  EXPECT_EQ(vertex_connectivity(complete_graph(4)), 3u);
  EXPECT_EQ(edge_connectivity(complete_graph(4)), 3u);
  EXPECT_EQ(vertex_connectivity(cycle_graph(7)), 2u);
  EXPECT_EQ(edge_connectivity(cycle_graph(7)), 2u);

  Graph star = star_construction(1, 2, 3);
  EXPECT_EQ(brute_edge_connectivity(star), 3u);
  EXPECT_EQ(edge_connectivity(star), 3u);
  EXPECT_EQ(vertex_connectivity(star), 1u);

  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  auto r = connectivity(two);
  EXPECT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.vertex_connectivity, 0u);
  EXPECT_EQ(r.edge_connectivity, 0u);
}

TEST(Connectivity, MatchesBruteForceAndWhitneyChain) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_graph(3 + trial % 6, 0.55, rng);
    std::size_t kappa = vertex_connectivity(g), lambda = edge_connectivity(g);
    EXPECT_EQ(kappa, brute_vertex_connectivity(g));
    EXPECT_EQ(lambda, brute_edge_connectivity(g));
    if (is_connected(g)) {
      EXPECT_LE(kappa, lambda);
      EXPECT_LE(lambda, g.min_degree());
    }
  }
}

TEST(Blocks, SmallCases) {
  Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto b = blocks(bowtie);
  ASSERT_EQ(b.blocks.size(), 2u);
  EXPECT_EQ(b.blocks[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(b.blocks[1], (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(b.cutvertices, (std::vector<Vertex>{2}));

  auto k4 = blocks(complete_graph(4));
  EXPECT_EQ(k4.blocks.size(), 1u);
  EXPECT_TRUE(k4.cutvertices.empty());

  auto star = blocks(star_construction(1, 3, 3));
  ASSERT_EQ(star.blocks.size(), 3u);
  EXPECT_EQ(star.blocks[0], (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(star.blocks[1], (std::vector<Vertex>{0, 4, 5, 6}));
  EXPECT_EQ(star.blocks[2], (std::vector<Vertex>{0, 7, 8, 9}));
  EXPECT_EQ(star.cutvertices, (std::vector<Vertex>{0}));

  auto isolated = blocks(Graph::from_edges(3, {{0, 1}}));
  EXPECT_EQ(isolated.blocks.size(), 2u);
}

TEST(Blocks, PartitionEdgesAndFormForest) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(4 + trial % 9, 0.3, rng);
    auto bd = blocks(g);
    std::size_t edge_total = 0;
    for (const auto& block : bd.blocks) edge_total += edges_within(g, block);
    EXPECT_EQ(edge_total, g.size());
    for (auto [u, v] : g.edges()) {
      int holders = 0;
      for (const auto& block : bd.blocks)
        holders += std::binary_search(block.begin(), block.end(), u) && std::binary_search(block.begin(), block.end(), v);
      EXPECT_EQ(holders, 1);
    }
    for (std::size_t i = 0; i < bd.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
        std::vector<Vertex> shared;
        std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(), bd.blocks[j].begin(), bd.blocks[j].end(),
                              std::back_inserter(shared));
        EXPECT_LE(shared.size(), 1u);
        if (shared.size() == 1) {
          EXPECT_TRUE(std::binary_search(bd.cutvertices.begin(), bd.cutvertices.end(), shared[0]));
        }
      }
    std::size_t incidences = 0;
    for (const auto& block : bd.blocks)
      for (Vertex cut : bd.cutvertices) incidences += std::binary_search(block.begin(), block.end(), cut);
    EXPECT_EQ(bd.tree_edges.size(), incidences);
    // Block-cut forest: nodes - edges = number of connected components.
    std::size_t nodes = bd.blocks.size() + bd.cutvertices.size();
    EXPECT_EQ(nodes - bd.tree_edges.size(), components(g).size());
  }
}

TEST(Chordality, SmallCases) {
  auto c4 = chordality(cycle_graph(4));
  EXPECT_FALSE(c4.chordal);
  EXPECT_TRUE(is_chordless_cycle(cycle_graph(4), c4.chordless_cycle));
  EXPECT_EQ(c4.chordless_cycle.size(), 4u);

  auto k5 = chordality(complete_graph(5));
  ASSERT_TRUE(k5.chordal);
  ASSERT_EQ(k5.tree->parts.size(), 1u);
  EXPECT_EQ(k5.tree->parts[0], (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(k5.tree->tree_edges.empty());

  Graph two = tree_of_cliques(1, 3, TreeTemplate::path(2, 1, 3));
  auto r = chordality(two);
  ASSERT_TRUE(r.chordal);
  ASSERT_EQ(r.tree->parts.size(), 2u);
  EXPECT_EQ(r.tree->parts[0].size(), 4u);
  EXPECT_EQ(r.tree->parts[1].size(), 4u);
  ASSERT_EQ(r.tree->tree_edges.size(), 1u);
  EXPECT_EQ(r.tree->tree_edges[0].adhesion, (std::vector<Vertex>{3}));
  EXPECT_FALSE(validate_clique_tree(two, *r.tree).has_value());
}

TEST(Chordality, AgreesWithBruteForceUpToEightVertices) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = random_graph(4 + trial % 5, 0.3 + 0.1 * (trial % 5), rng);
    auto r = chordality(g);
    EXPECT_EQ(r.chordal, !brute_has_chordless_cycle(g));
    if (r.chordal) {
      auto problem = validate_clique_tree(g, *r.tree);
      EXPECT_FALSE(problem.has_value()) << *problem;
    } else {
      EXPECT_TRUE(is_chordless_cycle(g, r.chordless_cycle));
    }
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(29);
  std::vector<Graph> corpus{cycle_graph(5), petersen(), complete_graph(6), Graph(7), star_construction(1, 3, 3),
                            star_construction(2, 2, 3), tree_of_cliques(1, 3, TreeTemplate::path(3, 1, 3))};
  for (int i = 0; i < 5; ++i) corpus.push_back(random_graph(9, 0.45, rng));
  for (const auto& g : corpus) {
    auto base = canonical_form(g);
    for (int t = 0; t < 100; ++t) {
      Graph h = relabel(g, random_permutation(g.order(), rng));
      EXPECT_EQ(canonical_form(h), base);
    }
    Graph h = relabel(g, random_permutation(g.order(), rng));
    EXPECT_EQ(canonical_graph(g, base), canonical_graph(h, canonical_form(h)));
  }
}

TEST(CanonicalForm, DistinguishesSmallCases) {
  Graph k4 = complete_graph(4);
  Graph k4_minus = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_NE(canonical_form(k4), canonical_form(k4_minus));

  Graph star_shape = tree_of_cliques(2, 3, TreeTemplate::star(5, 2));
  Graph path_shape = tree_of_cliques(2, 3, TreeTemplate::path(5, 2, 3));
  EXPECT_EQ(star_shape.size(), path_shape.size());
  EXPECT_NE(canonical_form(star_shape, 17), canonical_form(path_shape, 17));
  EXPECT_THROW(canonical_form(star_shape), LimitExceeded);
}

TEST(CanonicalForm, MatchesBruteForceIsomorphism) {
  std::mt19937_64 rng(31);
  int isomorphic_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 4 + trial % 5;
    Graph a = random_graph(n, 0.5, rng);
    Graph b;
    switch (trial % 3) {
      case 0: b = relabel(a, random_permutation(n, rng)); break;
      case 1: b = random_graph(n, 0.5, rng); break;
      default: {
        // Same edge count: move one edge, then relabel.
        auto edges = a.edges();
        if (edges.empty() || edges.size() == n * (n - 1) / 2) {
          b = a;
          break;
        }
        GraphBuilder gb(n);
        for (std::size_t i = 1; i < edges.size(); ++i) gb.add_edge(edges[i].first, edges[i].second);
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v)
            if (!a.has_edge(u, v) && Edge{u, v} != edges[0]) {
              gb.add_edge(u, v);
              u = n;
              break;
            }
        b = relabel(std::move(gb).build(), random_permutation(n, rng));
      }
    }
    bool truth = brute_isomorphic(a, b);
    isomorphic_pairs += truth;
    EXPECT_EQ(canonical_form(a) == canonical_form(b), truth);
  }
  EXPECT_GT(isomorphic_pairs, 300);
}
