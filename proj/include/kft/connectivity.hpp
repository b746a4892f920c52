#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "kft/graph.hpp"

namespace kft {

struct ConnectivityReport {
  std::vector<std::vector<Vertex>> components;
  std::size_t vertex_connectivity = 0;
  std::size_t edge_connectivity = 0;
};

/// Connected components of G[within], each sorted, ordered by least member.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  for (Vertex root = unseen.first(); root != npos; root = unseen.first()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order(), {root});
    unseen.erase(root);
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next &= unseen;
      unseen -= next;
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.all_vertices()); }

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

namespace detail {

/// Dense unit-ish capacity max-flow (Edmonds-Karp), stopping once `limit` is reached.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : n_(nodes), cap_(nodes * nodes, 0) {}

  void add_arc(std::size_t u, std::size_t v, int c) { cap_[u * n_ + v] += c; }

  int max_flow(std::size_t s, std::size_t t, int limit) {
    int flow = 0;
    std::vector<std::size_t> parent(n_);
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), npos);
      parent[s] = s;
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty() && parent[t] == npos) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n_; ++v) {
          if (parent[v] == npos && cap_[u * n_ + v] > 0) {
            parent[v] = u;
            q.push(v);
          }
        }
      }
      if (parent[t] == npos) break;
      int push = std::numeric_limits<int>::max();
      for (std::size_t v = t; v != s; v = parent[v]) push = std::min(push, cap_[parent[v] * n_ + v]);
      for (std::size_t v = t; v != s; v = parent[v]) {
        cap_[parent[v] * n_ + v] -= push;
        cap_[v * n_ + parent[v]] += push;
      }
      flow += push;
    }
    return flow;
  }

 private:
  std::size_t n_;
  std::vector<int> cap_;
};

inline std::size_t local_edge_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  FlowNetwork net(g.order());
  for (auto [u, v] : g.edges()) {
    net.add_arc(u, v, 1);
    net.add_arc(v, u, 1);
  }
  return static_cast<std::size_t>(net.max_flow(s, t, static_cast<int>(limit)));
}

/// Internally vertex-disjoint s-t paths for non-adjacent s, t.
inline std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  const std::size_t n = g.order();
  const int inf = static_cast<int>(n + 1);
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, inf);
    net.add_arc(2 * v + 1, 2 * u, inf);
  }
  return static_cast<std::size_t>(net.max_flow(2 * s + 1, 2 * t, static_cast<int>(limit)));
}

}  // namespace detail

/// lambda(G): min over targets of max-flow from vertex 0. Zero when disconnected or n <= 1.
inline std::size_t edge_connectivity(const Graph& g) {
  if (g.order() <= 1 || !is_connected(g)) return 0;
  std::size_t best = g.min_degree();
  for (Vertex t = 1; t < g.order() && best > 0; ++t)
    best = std::min(best, detail::local_edge_connectivity(g, 0, t, best));
  return best;
}

/// kappa(G) via vertex-split max-flow over non-adjacent pairs; kappa(K_n) = n - 1.
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  std::size_t best = n - 1;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, detail::local_vertex_connectivity(g, s, t, best));
  return best;
}

inline ConnectivityReport connectivity(const Graph& g) {
  ConnectivityReport r;
  for (const auto& comp : components(g)) r.components.push_back(comp.to_vector());
  r.vertex_connectivity = vertex_connectivity(g);
  r.edge_connectivity = edge_connectivity(g);
  return r;
}

/// True iff removing w disconnects the remaining vertices.
inline bool is_separator(const Graph& g, const VertexSet& w) {
  VertexSet rest = g.all_vertices() - w;
  return components_within(g, rest).size() >= 2;
}

}  // namespace kft
