#pragma once

#include <cstddef>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "kft/graph.hpp"
#include "kft/params.hpp"

namespace kft {

// Vertex layouts are fixed so that constructed graphs are byte-reproducible:
//  - star: hub clique on 0..k-1, then p consecutive blocks of c labels;
//  - tree of cliques: root part on 0..k+c-1, then the c fresh vertices of each part in breadth-first order.

/// p disjoint K_c joined completely to a K_k hub. Order pc + k, (C(c,2) + ck)p + C(k,2) edges.
inline Graph star_construction(std::size_t k, std::size_t p, std::size_t c) {
  FTParams{k, p, c}.validate();
  GraphBuilder b(p * c + k);
  std::vector<Vertex> hub(k);
  std::iota(hub.begin(), hub.end(), Vertex{0});
  b.make_clique(hub);
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Vertex> block(c);
    std::iota(block.begin(), block.end(), k + i * c);
    b.make_clique(block);
    b.join(block, hub);
  }
  return std::move(b).build();
}

/// Shape of a tree of (k+c)-cliques. Part 0 is the root; every other part names its parent and the
/// k slots of the parent part it is glued to. Slots of a part are its k attachment vertices (in the
/// listed order) followed by its c fresh vertices; the root's slots are its k+c vertices.
struct TreeTemplate {
  struct Link {
    std::size_t parent = 0;
    std::size_t child = 0;
    std::vector<std::size_t> attachment;  // k slot indices into the parent part
  };

  std::size_t parts = 1;
  std::vector<Link> links;

  /// Throws unless the links form a tree rooted at part 0 with valid k-subsets of k+c slots.
  void validate(std::size_t k, std::size_t c) const {
    if (parts < 1) throw InvalidArgument("template needs at least one part");
    if (links.size() + 1 != parts)
      throw InvalidArgument("template with " + std::to_string(parts) + " parts needs " + std::to_string(parts - 1) +
                            " links, got " + std::to_string(links.size()));
    std::vector<int> has_parent(parts, 0);
    for (const auto& l : links) {
      if (l.parent >= parts || l.child >= parts) throw InvalidArgument("template part index out of range");
      if (l.child == 0) throw InvalidArgument("root part 0 cannot be a child");
      if (has_parent[l.child]++) throw InvalidArgument("part " + std::to_string(l.child) + " has two parents");
      if (l.attachment.size() != k)
        throw InvalidArgument("attachment of part " + std::to_string(l.child) + " must have exactly k = " +
                              std::to_string(k) + " slots");
      std::vector<int> seen(k + c, 0);
      for (std::size_t s : l.attachment) {
        if (s >= k + c) throw InvalidArgument("attachment slot " + std::to_string(s) + " out of range");
        if (seen[s]++) throw InvalidArgument("attachment slot " + std::to_string(s) + " repeated");
      }
    }
    // Reachability from the root rules out cycles given one parent per non-root part.
    std::vector<int> reached(parts, 0);
    reached[0] = 1;
    std::queue<std::size_t> q;
    q.push(0);
    std::size_t count = 1;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (const auto& l : links)
        if (l.parent == u && !reached[l.child]) {
          reached[l.child] = 1;
          ++count;
          q.push(l.child);
        }
    }
    if (count != parts) throw InvalidArgument("template links do not form a tree rooted at part 0");
  }

  /// Every child glued to the root's first k slots.
  static TreeTemplate star(std::size_t parts, std::size_t k) {
    TreeTemplate t{parts, {}};
    std::vector<std::size_t> first(k);
    std::iota(first.begin(), first.end(), std::size_t{0});
    for (std::size_t i = 1; i < parts; ++i) t.links.push_back({0, i, first});
    return t;
  }

  /// Part i glued to the k newest (highest) slots of part i-1.
  static TreeTemplate path(std::size_t parts, std::size_t k, std::size_t c) {
    TreeTemplate t{parts, {}};
    std::vector<std::size_t> newest(k);
    std::iota(newest.begin(), newest.end(), c);
    for (std::size_t i = 1; i < parts; ++i) t.links.push_back({i - 1, i, newest});
    return t;
  }

  /// Heap-shaped binary tree: part i hangs off part (i-1)/2, left children on the parent's first k
  /// slots, right children on its last k slots.
  static TreeTemplate binary(std::size_t parts, std::size_t k, std::size_t c) {
    TreeTemplate t{parts, {}};
    for (std::size_t i = 1; i < parts; ++i) {
      std::vector<std::size_t> slots(k);
      std::iota(slots.begin(), slots.end(), i % 2 == 1 ? std::size_t{0} : c);
      t.links.push_back({(i - 1) / 2, i, slots});
    }
    return t;
  }
};

/// Parses "p k c" then p-1 lines "parent child a_1 .. a_k". Returns the template and (k, c).
struct TemplateDocument {
  TreeTemplate tree;
  std::size_t k = 0;
  std::size_t c = 0;
};

inline TemplateDocument parse_tree_template(std::istream& in) {
  TemplateDocument doc;
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("template: missing header line \"p k c\"");
  {
    std::istringstream hs(line);
    long long p = -1, k = -1, c = -1;
    std::string extra;
    if (!(hs >> p >> k >> c) || (hs >> extra) || p < 1 || k < 0 || c < 0)
      throw ParseError("template: malformed header \"" + line + "\"");
    doc.tree.parts = static_cast<std::size_t>(p);
    doc.k = static_cast<std::size_t>(k);
    doc.c = static_cast<std::size_t>(c);
  }
  for (std::size_t i = 1; i < doc.tree.parts; ++i) {
    if (!next_line()) throw ParseError("template: expected " + std::to_string(doc.tree.parts - 1) + " link lines");
    std::istringstream ls(line);
    long long parent = -1, child = -1;
    if (!(ls >> parent >> child) || parent < 0 || child < 0)
      throw ParseError("template: malformed link \"" + line + "\"");
    TreeTemplate::Link link{static_cast<std::size_t>(parent), static_cast<std::size_t>(child), {}};
    long long slot;
    while (ls >> slot) {
      if (slot < 0) throw ParseError("template: negative slot in \"" + line + "\"");
      link.attachment.push_back(static_cast<std::size_t>(slot));
    }
    if (!ls.eof()) throw ParseError("template: malformed link \"" + line + "\"");
    doc.tree.links.push_back(std::move(link));
  }
  if (next_line()) throw ParseError("template: trailing content \"" + line + "\"");
  return doc;
}

/// Chordal graph of (k+c)-clique parts glued along k-cliques following the template.
inline Graph tree_of_cliques(std::size_t k, std::size_t c, const TreeTemplate& tmpl) {
  if (k < 1) throw InvalidArgument("tree_of_cliques requires k >= 1");
  if (c < 3) throw InvalidArgument("tree_of_cliques requires c >= 3");
  tmpl.validate(k, c);

  const std::size_t n = tmpl.parts * c + k;
  GraphBuilder b(n);
  std::vector<std::vector<Vertex>> slots(tmpl.parts);
  slots[0].resize(k + c);
  std::iota(slots[0].begin(), slots[0].end(), Vertex{0});
  b.make_clique(slots[0]);
  Vertex fresh = k + c;

  std::queue<std::size_t> q;
  q.push(0);
  while (!q.empty()) {
    std::size_t part = q.front();
    q.pop();
    for (const auto& l : tmpl.links) {
      if (l.parent != part) continue;
      auto& s = slots[l.child];
      for (std::size_t a : l.attachment) s.push_back(slots[part][a]);
      for (std::size_t i = 0; i < c; ++i) s.push_back(fresh++);
      b.make_clique(s);
      q.push(l.child);
    }
  }
  return std::move(b).build();
}

struct Contraction {
  Graph graph;
  /// original_label[i] is the source label of vertex i; the k fresh hub vertices map to npos.
  std::vector<Vertex> original_label;
  /// True only for k = 1, where the result is known to be 1-FT((p-1)K_c).
  bool proven = false;
};

/// Replaces N[x] (a (c+k)-clique when d(x) = c+k-1) with a fresh K_k joined to N(N[x]).
/// Survivors keep ascending order; the fresh vertices take the last k labels.
inline Contraction contract_neighborhood(const Graph& g, const FTParams& params, Vertex x) {
  params.validate();
  g.check_vertex(x);
  if (g.order() != params.order())
    throw InvalidArgument("contraction requires |V| = pc + k = " + std::to_string(params.order()));
  if (params.p < 2) throw InvalidArgument("contraction requires p >= 2 (p = 1 leaves nothing)");
  if (g.degree(x) != params.c + params.k - 1)
    throw InvalidArgument("vertex " + std::to_string(x) + " has degree " + std::to_string(g.degree(x)) +
                          ", contraction requires c + k - 1 = " + std::to_string(params.c + params.k - 1));
  VertexSet closed = closed_neighborhood(g, x);
  if (!g.is_clique(closed)) throw InvalidArgument("closed neighborhood of vertex " + std::to_string(x) + " is not a clique");
  VertexSet boundary = open_neighborhood(g, closed);

  auto rest = remove_vertices(g, closed);
  const std::size_t base = rest.graph.order();
  GraphBuilder b(base + params.k);
  for (auto [u, v] : rest.graph.edges()) b.add_edge(u, v);
  std::vector<Vertex> hub(params.k);
  std::iota(hub.begin(), hub.end(), base);
  b.make_clique(hub);
  std::vector<Vertex> joined;
  for (Vertex i = 0; i < base; ++i)
    if (boundary.contains(rest.original_label[i])) joined.push_back(i);
  b.join(hub, joined);

  Contraction out{std::move(b).build(), std::move(rest.original_label), params.k == 1};
  out.original_label.resize(base + params.k, npos);
  return out;
}

/// C_{2p+1}.
inline Graph odd_cycle(std::size_t p) {
  if (p < 1) throw InvalidArgument("odd_cycle requires p >= 1");
  const std::size_t n = 2 * p + 1;
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

/// Harary graph H_{m,n}: the m-connected circulant-style graph on n vertices with ceil(mn/2) edges.
inline Graph harary(std::size_t m, std::size_t n) {
  if (m < 2 || m >= n) throw InvalidArgument("harary requires 2 <= m < n");
  GraphBuilder b(n);
  const std::size_t r = m / 2;
  for (Vertex i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= r; ++d) b.ensure_edge(i, (i + d) % n);
  if (m % 2 == 1) {
    if (n % 2 == 0) {
      for (Vertex i = 0; i < n / 2; ++i) b.ensure_edge(i, i + n / 2);
    } else {
      for (Vertex i = 0; i <= (n - 1) / 2; ++i) b.ensure_edge(i, (i + (n + 1) / 2) % n);
    }
  }
  return std::move(b).build();
}

/// H_{k+1, 2p+k}: a k-FT(pK_2) graph with (2p+k)(k+1)/2 edges for even k and 2p+k <= 2k-2.
inline Graph c2_even_k_construction(std::size_t k, std::size_t p) {
  if (p < 1) throw InvalidArgument("c2 construction requires p >= 1");
  if (k % 2 != 0 || k < 2) throw InvalidArgument("c2 construction requires even k >= 2");
  if (2 * p + k > 2 * k - 2) throw InvalidArgument("c2 construction requires 2p + k <= 2k - 2");
  return harary(k + 1, 2 * p + k);
}

}  // namespace kft
