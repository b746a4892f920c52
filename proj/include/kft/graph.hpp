#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kft/error.hpp"
#include "kft/vertex_set.hpp"

namespace kft {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  /// Builds from an edge list; rejects out-of-range endpoints, self-loops and duplicates.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
  }
  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Adjacency rows as one-word sets; requires order() <= 64.
  std::vector<SmallSet> small_rows() const;

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  bool is_clique(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.m_ == b.m_ && a.adj_ == b.adj_; }

  void check_vertex(Vertex v) const {
    if (v >= adj_.size())
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(adj_.size()));
  }

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> adj_;
  std::size_t m_ = 0;
};

/// Incremental construction of a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}

  std::size_t order() const { return g_.order(); }
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }

  /// Strict insertion: self-loops and duplicates are errors.
  GraphBuilder& add_edge(Vertex u, Vertex v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (g_.adj_[u].contains(v))
      throw InvalidArgument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    link(u, v);
    return *this;
  }
  /// Inserts the edge unless already present.
  GraphBuilder& ensure_edge(Vertex u, Vertex v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (!g_.adj_[u].contains(v)) link(u, v);
    return *this;
  }
  /// Makes the given vertices pairwise adjacent.
  GraphBuilder& make_clique(std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) ensure_edge(vs[i], vs[j]);
    return *this;
  }
  /// Joins every vertex of a to every vertex of b.
  GraphBuilder& join(std::span<const Vertex> a, std::span<const Vertex> b) {
    for (Vertex u : a)
      for (Vertex v : b) ensure_edge(u, v);
    return *this;
  }

  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  void link(Vertex u, Vertex v) {
    g_.adj_[u].insert(v);
    g_.adj_[v].insert(u);
    ++g_.m_;
  }

  Graph g_;
};

inline Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline std::size_t Graph::min_degree() const {
  std::size_t d = order() == 0 ? 0 : order();
  for (const auto& row : adj_) d = std::min(d, row.count());
  return d;
}

inline std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.count());
  return d;
}

inline std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    adj_[u].above(u).for_each([&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

inline std::vector<SmallSet> Graph::small_rows() const {
  if (order() > SmallSet::capacity)
    throw LimitExceeded("graph of order " + std::to_string(order()) + " exceeds the 64-vertex word limit");
  std::vector<SmallSet> rows;
  rows.reserve(order());
  for (const auto& row : adj_) rows.push_back(row.to_small());
  return rows;
}

inline bool Graph::is_clique(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && !(s - VertexSet(order(), {v})).subset_of(adj_[v])) ok = false;
  });
  return ok;
}

// ---------------------------------------------------------------------------
// Neighborhoods

/// N(v).
inline VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

/// N[v] = N(v) + v.
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

/// N(U): vertices outside U with a neighbor in U.
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& u) {
  VertexSet s(g.order());
  u.for_each([&](Vertex v) { s |= g.neighbors(v); });
  return s - u;
}

/// N[U] = N(U) + U.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& u) {
  VertexSet s = open_neighborhood(g, u);
  return s |= u;
}

// ---------------------------------------------------------------------------
// Vertex removal and induced subgraphs

struct Relabeled {
  Graph graph;
  /// original_label[i] is the label in the source graph of vertex i.
  std::vector<Vertex> original_label;
};

/// G[keep], survivors relabeled by ascending original label.
inline Relabeled induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> orig;
  std::vector<Vertex> fresh(g.order(), npos);
  keep.for_each([&](Vertex v) {
    g.check_vertex(v);
    fresh[v] = orig.size();
    orig.push_back(v);
  });
  GraphBuilder b(orig.size());
  for (Vertex i = 0; i < orig.size(); ++i)
    (g.neighbors(orig[i]) & keep).above(orig[i]).for_each([&](Vertex u) { b.add_edge(i, fresh[u]); });
  return {std::move(b).build(), std::move(orig)};
}

/// G - S.
inline Relabeled remove_vertices(const Graph& g, const VertexSet& s) {
  s.for_each([&](Vertex v) { g.check_vertex(v); });
  return induced_subgraph(g, g.all_vertices() - s);
}

}  // namespace kft
