#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "kft/graph.hpp"

namespace kft {

struct BlockDecomposition {
  /// Vertex sets of the blocks, each sorted; ordered by (least member, size, members).
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cutvertices;
  /// Block-cut tree edges as (block index, cutvertex) incidences.
  std::vector<std::pair<std::size_t, Vertex>> tree_edges;
};

/// Maximal 2-connected subgraphs, bridges and isolated vertices (Hopcroft-Tarjan, iterative).
inline BlockDecomposition blocks(const Graph& g) {
  const std::size_t n = g.order();
  BlockDecomposition out;
  std::vector<std::size_t> disc(n, npos), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> edge_stack;
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    Vertex next_nb;  // neighbor cursor
    std::size_t children;
  };

  auto flush_block = [&](Vertex u, Vertex v) {
    std::vector<Vertex> members;
    while (!edge_stack.empty()) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      members.push_back(e.first);
      members.push_back(e.second);
      if (e == Edge{u, v}) break;
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.blocks.push_back(std::move(members));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != npos) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.blocks.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root, npos, g.neighbors(root).first(), 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_nb != npos) {
        Vertex w = f.next_nb;
        f.next_nb = g.neighbors(f.v).next(w);
        if (disc[w] == npos) {
          ++f.children;
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, g.neighbors(w).first(), 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) is_cut[done.v] = true;
        break;
      }
      Vertex u = stack.back().v;
      low[u] = std::min(low[u], low[done.v]);
      if (low[done.v] >= disc[u]) {
        if (stack.back().parent != npos) is_cut[u] = true;
        flush_block(u, done.v);
      }
    }
  }

  std::sort(out.blocks.begin(), out.blocks.end(), [](const auto& a, const auto& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cutvertices.push_back(v);
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (Vertex v : out.blocks[b])
      if (is_cut[v]) out.tree_edges.emplace_back(b, v);
  return out;
}

/// Number of edges of G inside the given vertex set.
inline std::size_t edges_within(const Graph& g, std::span<const Vertex> vs) {
  VertexSet s = VertexSet::from_range(g.order(), vs);
  std::size_t twice = 0;
  for (Vertex v : vs) twice += (g.neighbors(v) & s).count();
  return twice / 2;
}

}  // namespace kft
