#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "kft/canonical.hpp"
#include "kft/connectivity.hpp"
#include "kft/graph.hpp"
#include "kft/packing.hpp"
#include "kft/params.hpp"
#include "kft/verify.hpp"

namespace kft {

inline constexpr std::size_t exhaustive_order_limit = 10;
inline constexpr std::size_t search_order_limit = 12;

struct SearchOptions {
  /// Largest edge count tried.
  std::size_t max_edges = 0;
  /// First edge count tried; 0 means the degree-sum lower bound. Used to resume an interrupted run.
  std::size_t start_edges = 0;
  /// Wall-clock budget in seconds; 0 disables.
  double budget_seconds = 0;
  /// Cap on degree-feasible labeled graphs examined; 0 disables.
  std::uint64_t budget_graphs = 0;
  std::size_t jobs = 1;
  /// Permits orders above the exhaustive limit (up to the hard search limit).
  bool allow_large = false;
};

struct SearchReport {
  FTParams params;
  std::size_t n = 0;
  std::size_t target_bound = 0;
  std::size_t lower_bound = 0;
  /// Edge counts [edges_from, edges_to] fully enumerated.
  std::size_t edges_from = 0;
  std::optional<std::size_t> edges_to;
  std::optional<std::size_t> minimum_found;
  /// Pairwise non-isomorphic solutions at the minimum, canonically labeled, sorted by certificate.
  std::vector<Graph> exemplars;
  std::vector<CanonicalForm> exemplar_forms;
  std::uint64_t labeled_solutions = 0;
  std::uint64_t graphs_examined = 0;
  bool exhaustive = false;
  bool budget_exhausted = false;
  double elapsed_seconds = 0;
};

namespace detail {

/// Enumerates labeled graphs on n <= 12 vertices with exactly m edges and minimum degree >= d,
/// slot by slot over the lexicographically ordered vertex pairs.
class EdgeSetEnumerator {
 public:
  EdgeSetEnumerator(std::size_t n, std::size_t min_degree) : n_(n), d_(min_degree) {
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) slots_.emplace_back(i, j);
    remaining_.assign((slots_.size() + 1) * n, 0);
    for (std::size_t s = slots_.size(); s-- > 0;) {
      for (Vertex v = 0; v < n; ++v) remaining_[s * n + v] = remaining_[(s + 1) * n + v];
      ++remaining_[s * n + slots_[s].first];
      ++remaining_[s * n + slots_[s].second];
    }
  }

  struct State {
    std::vector<SmallSet> rows;
    std::vector<std::size_t> degree;
    std::size_t deficit = 0;
    std::size_t slot = 0;
    std::size_t edges_left = 0;
  };

  State initial(std::size_t m) const {
    State st;
    st.rows.assign(n_, SmallSet{});
    st.degree.assign(n_, 0);
    st.deficit = n_ * d_;
    st.edges_left = m;
    return st;
  }

  std::size_t slot_count() const { return slots_.size(); }

  /// Splits the search below `st` into independent states at the given slot depth.
  void split(State st, std::size_t depth, std::vector<State>& out) const {
    if (st.slot >= depth || st.edges_left == 0 || st.slot == slots_.size()) {
      out.push_back(std::move(st));
      return;
    }
    walk_one(st, [&](State& next) { split(next, depth, out); });
  }

  /// Calls visit(rows) for every completion of st; visit returns false to stop.
  template <class Visit>
  bool run(State& st, Visit&& visit) const {
    if (st.edges_left == 0) {
      if (st.deficit != 0) return true;
      return visit(static_cast<const std::vector<SmallSet>&>(st.rows));
    }
    if (slots_.size() - st.slot < st.edges_left) return true;
    bool keep_going = true;
    walk_one(st, [&](State& next) {
      if (keep_going) keep_going = run(next, visit);
    });
    return keep_going;
  }

 private:
  /// Branches on slot st.slot: include the edge, then exclude it.
  template <class F>
  void walk_one(State& st, F&& f) const {
    const auto [u, v] = slots_[st.slot];
    const std::size_t s = st.slot;
    if (st.edges_left > 0) {
      std::size_t du = st.degree[u] < d_ ? 1 : 0, dv = st.degree[v] < d_ ? 1 : 0;
      std::size_t deficit = st.deficit - du - dv;
      if (deficit <= 2 * (st.edges_left - 1)) {
        st.rows[u].insert(v);
        st.rows[v].insert(u);
        ++st.degree[u];
        ++st.degree[v];
        std::size_t saved = st.deficit;
        st.deficit = deficit;
        --st.edges_left;
        ++st.slot;
        f(st);
        --st.slot;
        ++st.edges_left;
        st.deficit = saved;
        --st.degree[u];
        --st.degree[v];
        st.rows[u].erase(v);
        st.rows[v].erase(u);
      }
    }
    const std::size_t need_u = d_ > st.degree[u] ? d_ - st.degree[u] : 0;
    const std::size_t need_v = d_ > st.degree[v] ? d_ - st.degree[v] : 0;
    if (need_u <= remaining_[(s + 1) * n_ + u] && need_v <= remaining_[(s + 1) * n_ + v]) {
      ++st.slot;
      f(st);
      --st.slot;
    }
  }

  std::size_t n_;
  std::size_t d_;
  std::vector<Edge> slots_;
  std::vector<std::size_t> remaining_;
};

/// Reusable k-FT(pK_c) test on one-word adjacency rows.
class RowsVerifier {
 public:
  RowsVerifier(std::size_t n, const FTParams& params) : n_(n), params_(params), removal_(params.k) {}

  bool holds(const std::vector<SmallSet>& rows) {
    CliquePacker<SmallSet> packer(rows, params_.p, params_.c);
    const SmallSet all = SmallSet::full(n_);
    const std::size_t k = params_.k;
    for (std::size_t i = 0; i < k; ++i) removal_[i] = i;
    for (;;) {
      SmallSet avail = all;
      for (Vertex v : removal_) avail.erase(v);
      if (!packer.solve(avail)) return false;
      std::size_t i = k;
      while (i > 0 && removal_[i - 1] == n_ - k + i - 1) --i;
      if (i == 0) return true;
      ++removal_[i - 1];
      for (std::size_t j = i; j < k; ++j) removal_[j] = removal_[j - 1] + 1;
    }
  }

 private:
  std::size_t n_;
  FTParams params_;
  std::vector<Vertex> removal_;
};

inline bool connected_rows(const std::vector<SmallSet>& rows) {
  if (rows.empty()) return true;
  SmallSet seen, frontier;
  seen.insert(0);
  frontier.insert(0);
  while (frontier.any()) {
    SmallSet next;
    frontier.for_each([&](Vertex v) { next |= rows[v]; });
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen.count() == rows.size();
}

inline Graph graph_from_rows(const std::vector<SmallSet>& rows) {
  GraphBuilder b(rows.size());
  for (Vertex u = 0; u < rows.size(); ++u) rows[u].above(u).for_each([&](Vertex v) { b.add_edge(u, v); });
  return std::move(b).build();
}

}  // namespace detail

/// Least edge count of a k-FT(pK_c) graph on pc + k vertices, by exhaustive enumeration.
///
/// Edge counts are tried upward from the degree-sum lower bound. Each level enumerates labeled graphs
/// with minimum degree >= c+k-1. Survivors must pass the fault-tolerance check; when k >= 1 and c >= 3
/// they must also be connected and have edge connectivity >= c+k-1. Solutions are deduplicated by
/// canonical form. The first level with a solution is enumerated completely so the exemplar list is exact.
inline SearchReport search_minimum(const FTParams& params, const SearchOptions& opts) {
  params.validate();
  const auto started = std::chrono::steady_clock::now();
  SearchReport report;
  report.params = params;
  report.n = params.order();
  report.target_bound = params.star_edge_count();
  report.lower_bound = params.degree_sum_lower_bound();
  const std::size_t n = report.n;
  if (n > search_order_limit || (n > exhaustive_order_limit && !opts.allow_large))
    throw LimitExceeded("search limited to pc + k <= " + std::to_string(exhaustive_order_limit) +
                        " (or <= " + std::to_string(search_order_limit) + " when large searches are allowed), got " +
                        std::to_string(n));
  report.edges_from = std::max(report.lower_bound, opts.start_edges);
  const std::size_t max_edges = std::min(opts.max_edges, binomial(n, 2));

  const std::size_t d = params.c + params.k - 1;
  const bool need_connected = params.k >= 1 && params.c >= 3;
  detail::EdgeSetEnumerator enumerator(n, d);

  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> stop{false};
  auto out_of_budget = [&] {
    if (opts.budget_graphs && examined.load(std::memory_order_relaxed) >= opts.budget_graphs) return true;
    if (opts.budget_seconds > 0) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - started;
      if (el.count() >= opts.budget_seconds) return true;
    }
    return false;
  };

  for (std::size_t m = report.edges_from; m <= max_edges; ++m) {
    std::set<std::vector<std::uint64_t>> seen_certs;
    std::vector<std::pair<CanonicalForm, Graph>> found;
    std::uint64_t labeled = 0;
    std::mutex merge;

    auto process_state = [&](detail::EdgeSetEnumerator::State st) {
      detail::RowsVerifier verifier(n, params);
      std::uint64_t local = 0;
      enumerator.run(st, [&](const std::vector<SmallSet>& rows) {
        ++local;
        if ((local & 0xfff) == 0) {
          examined.fetch_add(0x1000, std::memory_order_relaxed);
          if (out_of_budget()) stop.store(true);
          if (stop.load(std::memory_order_relaxed)) return false;
        }
        if (need_connected && !detail::connected_rows(rows)) return true;
        if (!verifier.holds(rows)) return true;
        Graph g = detail::graph_from_rows(rows);
        if (need_connected && edge_connectivity(g) + 1 < params.c + params.k) return true;
        auto form = canonical_form(g, n);
        std::lock_guard lock(merge);
        ++labeled;
        if (seen_certs.insert(form.certificate).second) {
          Graph canon = canonical_graph(g, form);
          found.emplace_back(std::move(form), std::move(canon));
        }
        return true;
      });
      examined.fetch_add(local & 0xfff, std::memory_order_relaxed);
    };

    auto root = enumerator.initial(m);
    if (opts.jobs <= 1) {
      process_state(std::move(root));
    } else {
      std::vector<detail::EdgeSetEnumerator::State> tasks;
      enumerator.split(std::move(root), std::min<std::size_t>(enumerator.slot_count(), 12), tasks);
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < opts.jobs; ++w)
        pool.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < tasks.size() && !stop.load(); i = next.fetch_add(1))
            process_state(std::move(tasks[i]));
        });
      pool.clear();
    }
    if (out_of_budget()) stop.store(true);
    if (stop.load()) {
      report.budget_exhausted = true;
      break;
    }
    report.edges_to = m;
    if (!found.empty()) {
      std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      report.minimum_found = m;
      report.labeled_solutions = labeled;
      for (auto& [form, g] : found) {
        report.exemplar_forms.push_back(std::move(form));
        report.exemplars.push_back(std::move(g));
      }
      break;
    }
  }
  report.graphs_examined = examined.load();
  report.exhaustive = !report.budget_exhausted && report.edges_to.has_value() &&
                      (report.minimum_found.has_value() || *report.edges_to == max_edges);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

struct ConjectureProbe {
  SearchReport report;
  /// "supports": no graph below the bound and the bound is attained; "refuted": a graph below the
  /// bound; "inconclusive": budget ran out or the bound was not attained within the range.
  std::string outcome;
  std::optional<Graph> counterexample;
  bool counterexample_reverified = false;
};

/// Searches up to the star-construction bound for a k-FT(pK_c) graph with fewer edges (k >= 2, k < c).
inline ConjectureProbe probe_conjecture(const FTParams& params, SearchOptions opts) {
  params.validate();
  if (params.k < 2) throw InvalidArgument("probe_conjecture requires k >= 2");
  params.require_k_below_c();
  opts.max_edges = params.star_edge_count();
  ConjectureProbe probe;
  probe.report = search_minimum(params, opts);
  const auto& r = probe.report;
  if (r.minimum_found && *r.minimum_found < r.target_bound) {
    probe.outcome = "refuted";
    probe.counterexample = r.exemplars.front();
    probe.counterexample_reverified = verify_ft_bruteforce(*probe.counterexample, params).holds;
  } else if (r.exhaustive && r.minimum_found == r.target_bound) {
    probe.outcome = "supports";
  } else {
    probe.outcome = "inconclusive";
  }
  return probe;
}

}  // namespace kft
