#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "kft/connectivity.hpp"
#include "kft/graph.hpp"

namespace kft {

struct CliqueTreeEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Vertex> adhesion;  // parts[a] & parts[b]
};

/// Tree-decomposition whose parts are the maximal cliques.
struct CliqueTree {
  std::vector<std::vector<Vertex>> parts;
  std::vector<CliqueTreeEdge> tree_edges;
};

struct ChordalityResult {
  bool chordal = false;
  std::optional<CliqueTree> tree;
  /// Chordless cycle of length >= 4 when not chordal, in cyclic order.
  std::vector<Vertex> chordless_cycle;
  /// Maximum-cardinality-search visit order.
  std::vector<Vertex> mcs_order;
};

/// Maximum cardinality search; ties broken by least label.
inline std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> done(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = npos;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (pick == npos || weight[v] > weight[pick])) pick = v;
    done[pick] = true;
    order.push_back(pick);
    g.neighbors(pick).for_each([&](Vertex u) {
      if (!done[u]) ++weight[u];
    });
  }
  return order;
}

namespace detail {

/// Shortest path from s to t inside `within`, or empty.
inline std::vector<Vertex> shortest_path_within(const Graph& g, Vertex s, Vertex t, const VertexSet& within) {
  std::vector<Vertex> parent(g.order(), npos);
  std::queue<Vertex> q;
  parent[s] = s;
  q.push(s);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    if (u == t) break;
    (g.neighbors(u) & within).for_each([&](Vertex w) {
      if (parent[w] == npos) {
        parent[w] = u;
        q.push(w);
      }
    });
  }
  if (parent[t] == npos) return {};
  std::vector<Vertex> path;
  for (Vertex v = t; v != s; v = parent[v]) path.push_back(v);
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Chordless cycle of length >= 4 through some vertex v and two non-adjacent neighbors x, y of v.
inline std::vector<Vertex> find_chordless_cycle(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet& nb = g.neighbors(v);
    for (Vertex x = nb.first(); x != npos; x = nb.next(x)) {
      for (Vertex y = nb.next(x); y != npos; y = nb.next(y)) {
        if (g.has_edge(x, y)) continue;
        VertexSet within = g.all_vertices() - nb;
        within.erase(v);
        within.insert(x);
        within.insert(y);
        auto path = shortest_path_within(g, x, y, within);
        if (path.empty()) continue;
        std::vector<Vertex> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace detail

/// Recognizes chordal graphs; builds a clique tree or returns a chordless cycle.
inline ChordalityResult chordality(const Graph& g) {
  const std::size_t n = g.order();
  ChordalityResult r;
  r.mcs_order = maximum_cardinality_search(g);

  // Earlier-visited neighbours must form a clique for the reverse order to be a perfect elimination order.
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[r.mcs_order[i]] = i;
  std::vector<VertexSet> candidate;
  candidate.reserve(n);
  bool peo = true;
  for (std::size_t i = 0; i < n && peo; ++i) {
    Vertex v = r.mcs_order[i];
    VertexSet earlier(n);
    g.neighbors(v).for_each([&](Vertex u) {
      if (pos[u] < i) earlier.insert(u);
    });
    if (!g.is_clique(earlier)) peo = false;
    earlier.insert(v);
    candidate.push_back(std::move(earlier));
  }
  if (!peo) {
    r.chordless_cycle = detail::find_chordless_cycle(g);
    return r;
  }
  r.chordal = true;

  std::vector<std::vector<Vertex>> cliques;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidate.size() && maximal; ++j) {
      if (i == j || !candidate[i].subset_of(candidate[j])) continue;
      // Equal sets: keep the first occurrence only.
      if (!(candidate[j].subset_of(candidate[i])) || j < i) maximal = false;
    }
    if (maximal) cliques.push_back(candidate[i].to_vector());
  }
  std::sort(cliques.begin(), cliques.end());

  CliqueTree tree;
  tree.parts = cliques;
  const std::size_t parts = cliques.size();
  std::vector<VertexSet> sets;
  for (const auto& c : cliques) sets.push_back(VertexSet::from_range(n, c));
  // Maximum-weight spanning tree of the clique intersection graph (Prim).
  std::vector<bool> in_tree(parts, false);
  if (parts > 0) in_tree[0] = true;
  for (std::size_t added = 1; added < parts; ++added) {
    std::size_t best_a = npos, best_b = npos, best_w = 0;
    for (std::size_t a = 0; a < parts; ++a) {
      if (!in_tree[a]) continue;
      for (std::size_t b = 0; b < parts; ++b) {
        if (in_tree[b]) continue;
        std::size_t w = (sets[a] & sets[b]).count();
        if (best_a == npos || w > best_w) {
          best_a = a;
          best_b = b;
          best_w = w;
        }
      }
    }
    in_tree[best_b] = true;
    tree.tree_edges.push_back({best_a, best_b, (sets[best_a] & sets[best_b]).to_vector()});
  }
  r.tree = std::move(tree);
  return r;
}

/// Checks the tree-decomposition conditions plus clique parts; returns a description of the first violation.
inline std::optional<std::string> validate_clique_tree(const Graph& g, const CliqueTree& t) {
  const std::size_t n = g.order();
  std::vector<VertexSet> sets;
  for (const auto& p : t.parts) sets.push_back(VertexSet::from_range(n, p));
  if (!t.parts.empty() && t.tree_edges.size() + 1 != t.parts.size()) return "tree edge count mismatch";
  VertexSet covered(n);
  for (const auto& s : sets) {
    if (!g.is_clique(s)) return "part is not a clique";
    covered |= s;
  }
  if (covered.count() != n) return "parts do not cover all vertices";
  for (auto [u, v] : g.edges()) {
    bool hit = std::any_of(sets.begin(), sets.end(), [&](const VertexSet& s) { return s.contains(u) && s.contains(v); });
    if (!hit) return "edge not covered by any part";
  }
  // Running intersection: parts containing each vertex induce a connected subtree.
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> holders;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i].contains(v)) holders.push_back(i);
    std::vector<bool> reached(sets.size(), false);
    reached[holders.front()] = true;
    std::size_t count = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : t.tree_edges) {
        bool a = sets[e.a].contains(v), b = sets[e.b].contains(v);
        if (a && b && reached[e.a] != reached[e.b]) {
          reached[e.a] = reached[e.b] = true;
          ++count;
          grew = true;
        }
      }
    }
    if (count != holders.size()) return "running intersection violated at vertex " + std::to_string(v);
  }
  for (const auto& e : t.tree_edges) {
    if ((sets[e.a] & sets[e.b]).to_vector() != e.adhesion) return "adhesion set mismatch";
  }
  return std::nullopt;
}

struct TreeOfCliquesCheck {
  bool holds = false;
  std::string reason;  // empty when holds
};

/// Chordal, order p*c + k, every maximal clique of size k + c and every minimal separator of size k.
inline TreeOfCliquesCheck check_tree_of_cliques_hypotheses(const Graph& g, std::size_t k, std::size_t p,
                                                           std::size_t c) {
  if (g.order() != p * c + k)
    return {false, "order " + std::to_string(g.order()) + " != pc + k = " + std::to_string(p * c + k)};
  auto r = chordality(g);
  if (!r.chordal) return {false, "not chordal"};
  for (const auto& part : r.tree->parts)
    if (part.size() != k + c)
      return {false, "maximal clique of size " + std::to_string(part.size()) + " != " + std::to_string(k + c)};
  for (const auto& e : r.tree->tree_edges)
    if (e.adhesion.size() != k)
      return {false, "minimal separator of size " + std::to_string(e.adhesion.size()) + " != " + std::to_string(k)};
  return {true, {}};
}

}  // namespace kft
