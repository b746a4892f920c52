#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kft/graph.hpp"
#include "kft/params.hpp"

namespace kft {

/// p pairwise-disjoint vertex sets, each inducing a complete subgraph.
struct CliquePacking {
  std::vector<std::vector<Vertex>> cliques;

  friend bool operator==(const CliquePacking&, const CliquePacking&) = default;
};

namespace detail {

inline void check_packing_params(std::size_t p, std::size_t c) {
  if (p < 1) throw InvalidArgument("p must be >= 1");
  if (c < 2) throw InvalidArgument("c must be >= 2");
}

/// Backtracking search for p disjoint c-cliques inside an availability set.
///
/// The least available vertex is either covered by a clique whose other members are larger
/// neighbours (extended in ascending order) or excluded. Once the available vertices number exactly
/// the remaining demand, exclusion is impossible and every vertex must be covered. Vertices with fewer
/// than c-1 available neighbours are discarded up front.
template <class Set>
class CliquePacker {
 public:
  CliquePacker(std::span<const Set> adj, std::size_t p, std::size_t c) : adj_(adj), p_(p), c_(c) {}

  bool solve(const Set& avail) {
    chosen_.clear();
    return pack(avail, p_);
  }

  /// Cliques of the last successful solve(), in discovery order.
  const std::vector<Set>& cliques() const { return chosen_; }

 private:
  bool pack(Set avail, std::size_t remaining) {
    if (remaining == 0) return true;
    const std::size_t demand = remaining * c_;
    std::size_t size = avail.count();
    if (size < demand) return false;
    for (bool changed = true; changed;) {
      changed = false;
      Set low = avail;
      low -= low;  // empty set of the right universe
      avail.for_each([&](Vertex v) {
        if ((adj_[v] & avail).count() + 1 < c_) low.insert(v);
      });
      if (low.any()) {
        if (size == demand) return false;
        avail -= low;
        size = avail.count();
        if (size < demand) return false;
        changed = true;
      }
    }
    const Vertex v = avail.first();
    Set clique = avail;
    clique -= clique;
    clique.insert(v);
    if (extend(avail, remaining, clique, adj_[v] & avail, c_ - 1)) return true;
    if (size == demand) return false;
    avail.erase(v);
    return pack(std::move(avail), remaining);
  }

  bool extend(const Set& avail, std::size_t remaining, Set& clique, const Set& cand, std::size_t need) {
    if (need == 0) {
      chosen_.push_back(clique);
      if (pack(avail - clique, remaining - 1)) return true;
      chosen_.pop_back();
      return false;
    }
    std::size_t left = cand.count();
    for (Vertex u = cand.first(); u != npos && left >= need; u = cand.next(u), --left) {
      clique.insert(u);
      Set next = cand.above(u) & adj_[u];
      if (next.count() + 1 >= need && extend(avail, remaining, clique, next, need - 1)) return true;
      clique.erase(u);
    }
    return false;
  }

  std::span<const Set> adj_;
  std::size_t p_;
  std::size_t c_;
  std::vector<Set> chosen_;
};

template <class Set>
CliquePacking to_packing(const std::vector<Set>& sets) {
  CliquePacking out;
  for (const auto& s : sets) {
    std::vector<Vertex> members;
    s.for_each([&](Vertex v) { members.push_back(v); });
    out.cliques.push_back(std::move(members));
  }
  return out;
}

}  // namespace detail

/// Packing of p disjoint c-cliques inside G[avail], in the labels of G.
inline std::optional<CliquePacking> find_disjoint_cliques_within(const Graph& g, const VertexSet& avail,
                                                                 std::size_t p, std::size_t c) {
  detail::check_packing_params(p, c);
  if (g.order() <= SmallSet::capacity) {
    auto rows = g.small_rows();
    detail::CliquePacker<SmallSet> packer(rows, p, c);
    if (!packer.solve(avail.to_small())) return std::nullopt;
    return detail::to_packing(packer.cliques());
  }
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v));
  detail::CliquePacker<VertexSet> packer(rows, p, c);
  if (!packer.solve(avail)) return std::nullopt;
  return detail::to_packing(packer.cliques());
}

/// Deterministic exact search for p pairwise-disjoint c-cliques in G.
inline std::optional<CliquePacking> find_disjoint_cliques(const Graph& g, std::size_t p, std::size_t c) {
  return find_disjoint_cliques_within(g, g.all_vertices(), p, c);
}

/// Re-checks a packing against G: p sets of size c, pairwise disjoint, each a clique.
inline bool is_valid_packing(const Graph& g, const CliquePacking& packing, std::size_t p, std::size_t c) {
  if (packing.cliques.size() != p) return false;
  VertexSet used(g.order());
  for (const auto& clique : packing.cliques) {
    if (clique.size() != c) return false;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (clique[i] >= g.order() || used.contains(clique[i])) return false;
      used.insert(clique[i]);
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        if (clique[j] >= g.order() || !g.has_edge(clique[i], clique[j])) return false;
    }
  }
  return true;
}

inline constexpr std::size_t default_oracle_budget = 50'000'000;

/// Exhaustive check over every choice of p disjoint c-subsets; no pruning beyond disjointness.
inline bool oracle_packing_exists(const Graph& g, std::size_t p, std::size_t c,
                                  std::size_t budget = default_oracle_budget) {
  detail::check_packing_params(p, c);
  const std::size_t n = g.order();
  if (p * c > n) return false;

  std::vector<std::vector<Vertex>> subsets;
  std::vector<Vertex> pick(c);
  auto gen = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == c) {
      subsets.push_back(pick);
      return;
    }
    for (Vertex v = start; v < n; ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  const std::size_t combos = binomial(binomial(n, c), p);
  if (binomial(n, c) > budget || combos > budget)
    throw LimitExceeded("oracle instance too large: C(C(" + std::to_string(n) + "," + std::to_string(c) + ")," +
                        std::to_string(p) + ") exceeds budget");
  gen(gen, 0, 0);

  auto is_clique = [&](const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!g.has_edge(s[i], s[j])) return false;
    return true;
  };
  std::vector<std::size_t> chosen;
  std::vector<int> used(n, 0);
  auto choose = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == p) {
      for (std::size_t idx : chosen)
        if (!is_clique(subsets[idx])) return false;
      return true;
    }
    for (std::size_t i = start; i < subsets.size(); ++i) {
      bool disjoint = true;
      for (Vertex v : subsets[i]) disjoint = disjoint && used[v] == 0;
      if (!disjoint) continue;
      for (Vertex v : subsets[i]) used[v] = 1;
      chosen.push_back(i);
      bool found = self(self, i + 1);
      chosen.pop_back();
      for (Vertex v : subsets[i]) used[v] = 0;
      if (found) return true;
    }
    return false;
  };
  return choose(choose, 0);
}

}  // namespace kft
