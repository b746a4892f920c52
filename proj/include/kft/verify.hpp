#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kft/graph.hpp"
#include "kft/packing.hpp"
#include "kft/params.hpp"

namespace kft {

struct FTVerdict {
  bool holds = false;
  /// Lexicographically least failing removal set; present iff !holds.
  std::optional<std::vector<Vertex>> counterexample;
  /// Removal sets examined: all C(n,k) when the property holds, else up to and including the counterexample.
  std::size_t witness_count = 0;
  /// Packings for the first few removal sets, when requested.
  std::vector<std::pair<std::vector<Vertex>, CliquePacking>> sample_witnesses;
  /// Why the property fails before any search, e.g. too few vertices.
  std::string reason;
};

struct VerifyOptions {
  std::size_t jobs = 1;
  std::size_t retain_witnesses = 0;
};

namespace detail {

/// k-subsets of {0..n-1} in lexicographic order.
class Combination {
 public:
  Combination(std::size_t n, std::size_t k) : n_(n), idx_(k) {
    for (std::size_t i = 0; i < k; ++i) idx_[i] = i;
  }

  /// The combination of lexicographic rank r.
  static Combination unrank(std::size_t n, std::size_t k, std::size_t r) {
    Combination out(n, k);
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t v = next;; ++v) {
        std::size_t below = binomial(n - v - 1, k - i - 1);
        if (r < below) {
          out.idx_[i] = v;
          next = v + 1;
          break;
        }
        r -= below;
      }
    }
    return out;
  }

  const std::vector<Vertex>& get() const { return idx_; }

  bool advance() {
    const std::size_t k = idx_.size();
    std::size_t i = k;
    while (i > 0 && idx_[i - 1] == n_ - k + i - 1) --i;
    if (i == 0) return false;
    ++idx_[i - 1];
    for (std::size_t j = i; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Vertex> idx_;
};

/// Lexicographic rank of a sorted k-subset.
inline std::size_t rank_of(std::size_t n, const std::vector<Vertex>& s) {
  std::size_t r = 0, next = 0;
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = next; v < s[i]; ++v) r += binomial(n - v - 1, k - i - 1);
    next = s[i] + 1;
  }
  return r;
}

/// Least removal set that leaves a vertex of degree below c+k-1 unable to join any c-clique.
/// Only meaningful when n = pc + k, where every surviving vertex must be covered.
inline std::optional<std::vector<Vertex>> low_degree_counterexample(const Graph& g, const FTParams& params) {
  const std::size_t n = g.order();
  std::optional<std::vector<Vertex>> best;
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) + 1 >= params.c + params.k) continue;
    VertexSet s(n);
    std::size_t taken = 0;
    g.neighbors(x).for_each([&](Vertex u) {
      if (taken < params.k) {
        s.insert(u);
        ++taken;
      }
    });
    for (Vertex u = 0; u < n && taken < params.k; ++u) {
      if (u != x && !s.contains(u)) {
        s.insert(u);
        ++taken;
      }
    }
    auto cand = s.to_vector();
    if (!best || lex_less(cand, *best)) best = std::move(cand);
  }
  return best;
}

/// Scans removal sets of ranks [0, limit) and returns the least failing rank, or npos.
template <class Set>
std::size_t first_failing_rank(std::span<const Set> adj, std::size_t n, const FTParams& params, std::size_t limit,
                               std::size_t jobs) {
  const Set all = Set::full(n);
  auto failing_in = [&](std::size_t begin, std::size_t end, const std::atomic<std::size_t>* stop) {
    CliquePacker<Set> packer(adj, params.p, params.c);
    auto comb = Combination::unrank(n, params.k, begin);
    for (std::size_t r = begin; r < end; ++r) {
      if (stop && r >= stop->load(std::memory_order_relaxed)) return npos;
      Set avail = all;
      for (Vertex v : comb.get()) avail.erase(v);
      if (!packer.solve(avail)) return r;
      comb.advance();
    }
    return npos;
  };

  if (jobs <= 1 || limit < 64) return failing_in(0, limit, nullptr);

  // Workers claim consecutive rank chunks; the minimum failing rank wins regardless of scheduling.
  const std::size_t chunk = std::max<std::size_t>(1, limit / (jobs * 16));
  std::atomic<std::size_t> next_chunk{0};
  std::atomic<std::size_t> best{npos};
  auto worker = [&] {
    for (;;) {
      std::size_t begin = next_chunk.fetch_add(chunk);
      if (begin >= limit || begin >= best.load()) return;
      std::size_t found = failing_in(begin, std::min(limit, begin + chunk), &best);
      if (found == npos) continue;
      std::size_t cur = best.load();
      while (found < cur && !best.compare_exchange_weak(cur, found)) {
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
  pool.clear();
  return best.load();
}

template <class Set>
FTVerdict verify_rows(const Graph& g, std::span<const Set> adj, const FTParams& params, const VerifyOptions& opts) {
  const std::size_t n = g.order();
  FTVerdict verdict;
  const std::size_t total = binomial(n, params.k);

  std::size_t limit = total;
  std::optional<std::vector<Vertex>> screened;
  if (n == params.order()) {
    screened = low_degree_counterexample(g, params);
    if (screened) limit = rank_of(n, *screened);
  }

  std::size_t failing = first_failing_rank<Set>(adj, n, params, limit, opts.jobs);
  if (failing == npos && screened) failing = limit;
  if (failing != npos) {
    verdict.holds = false;
    verdict.counterexample = Combination::unrank(n, params.k, failing).get();
    verdict.witness_count = failing + 1;
  } else {
    verdict.holds = true;
    verdict.witness_count = total;
  }

  if (opts.retain_witnesses > 0) {
    Combination comb(n, params.k);
    for (std::size_t r = 0; r < std::min(opts.retain_witnesses, total); ++r, comb.advance()) {
      VertexSet avail = g.all_vertices();
      for (Vertex v : comb.get()) avail.erase(v);
      if (auto packing = find_disjoint_cliques_within(g, avail, params.p, params.c))
        verdict.sample_witnesses.emplace_back(comb.get(), std::move(*packing));
      else
        break;
    }
  }
  return verdict;
}

}  // namespace detail

/// Decides whether G - S contains p disjoint c-cliques for every S with |S| = k.
///
/// Removal sets of size exactly k suffice: a packing that survives a larger removal survives any
/// subset of it. When n = pc + k, a vertex of degree below c+k-1 yields an immediate counterexample
/// that bounds the lexicographic scan.
inline FTVerdict verify_ft(const Graph& g, const FTParams& params, const VerifyOptions& opts = {}) {
  params.validate();
  const std::size_t n = g.order();
  if (n < params.order()) {
    FTVerdict v;
    v.reason = "|V| = " + std::to_string(n) + " < pc + k = " + std::to_string(params.order());
    std::vector<Vertex> s;
    for (Vertex i = 0; i < std::min(n, params.k); ++i) s.push_back(i);
    v.counterexample = std::move(s);
    v.witness_count = 1;
    return v;
  }
  if (n <= SmallSet::capacity) {
    auto rows = g.small_rows();
    return detail::verify_rows<SmallSet>(g, rows, params, opts);
  }
  std::vector<VertexSet> rows;
  for (Vertex v = 0; v < n; ++v) rows.push_back(g.neighbors(v));
  return detail::verify_rows<VertexSet>(g, rows, params, opts);
}

/// Independent verifier: every S with |S| <= k, packing decided by the exhaustive oracle.
inline FTVerdict verify_ft_bruteforce(const Graph& g, const FTParams& params) {
  params.validate();
  const std::size_t n = g.order();
  FTVerdict verdict;
  verdict.holds = true;
  for (std::size_t size = 0; size <= std::min(params.k, n); ++size) {
    detail::Combination comb(n, size);
    do {
      ++verdict.witness_count;
      auto rest = remove_vertices(g, VertexSet::from_range(n, comb.get()));
      if (!oracle_packing_exists(rest.graph, params.p, params.c)) {
        verdict.holds = false;
        verdict.counterexample = comb.get();
        return verdict;
      }
    } while (comb.advance());
  }
  if (n < params.k) {
    verdict.holds = false;
    verdict.counterexample = VertexSet::full(n).to_vector();
  }
  return verdict;
}

struct EdgeBound {
  std::size_t edges = 0;
  bool proven = false;
};

/// Fewest edges known to suffice for a k-FT(pK_c) graph on pc + k vertices, and whether it is known optimal.
inline EdgeBound best_known_edge_bound(const FTParams& params) {
  params.validate();
  const auto [k, p, c] = params;
  if (c >= 3) return {params.star_edge_count(), k <= 1};
  if (k == 0) return {p, true};
  if (k == 1) return {2 * p + 1, true};
  if (k % 2 == 0 && 2 * p + k <= 2 * k - 2) return {(2 * p + k) * (k + 1) / 2, true};
  return {params.star_edge_count(), false};
}

struct MinimumCandidate {
  bool candidate = false;
  bool proven = false;
  std::size_t bound = 0;
  std::string status;
};

/// Whether G has pc + k vertices, is k-FT(pK_c), and meets the best known edge bound.
inline MinimumCandidate is_minimum_candidate(const Graph& g, const FTParams& params, const VerifyOptions& opts = {}) {
  auto bound = best_known_edge_bound(params);
  MinimumCandidate out{false, bound.proven, bound.edges, {}};
  if (g.order() != params.order()) {
    out.status = "order " + std::to_string(g.order()) + " != pc + k = " + std::to_string(params.order());
    return out;
  }
  if (g.size() > bound.edges) {
    out.status = std::to_string(g.size()) + " edges > bound " + std::to_string(bound.edges);
    return out;
  }
  if (!verify_ft(g, params, opts).holds) {
    out.status = "not k-FT(pK_c)";
    return out;
  }
  if (g.size() < bound.edges) {
    out.status = std::to_string(g.size()) + " edges beats best known bound " + std::to_string(bound.edges);
    return out;
  }
  out.candidate = true;
  out.status = bound.proven ? "minimum at bound " + std::to_string(bound.edges)
                            : "candidate at bound " + std::to_string(bound.edges) + ", minimality unproven";
  return out;
}

}  // namespace kft
