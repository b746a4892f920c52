#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kft/blocks.hpp"
#include "kft/connectivity.hpp"
#include "kft/graph.hpp"
#include "kft/packing.hpp"
#include "kft/params.hpp"
#include "kft/verify.hpp"

namespace kft {

/// Outcome of one structural check. A failing record carries a witness that re-verifies as a violation.
struct AuditRecord {
  std::string check;
  std::string property;
  bool passed = true;
  std::size_t instances = 0;
  std::vector<Vertex> witness;          // offending vertex or set
  std::optional<std::size_t> observed;  // offending value, e.g. the actual degree
  std::string detail;
};

struct AuditReport {
  std::vector<AuditRecord> records;

  bool passed() const {
    return std::all_of(records.begin(), records.end(), [](const AuditRecord& r) { return r.passed; });
  }
  const AuditRecord* find(const std::string& check) const {
    for (const auto& r : records)
      if (r.check == check) return &r;
    return nullptr;
  }
  void append(const AuditReport& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }
};

struct AuditOptions {
  /// Removal sets sampled per vertex for the survival check.
  std::size_t samples_per_vertex = 200;
  /// All removal sets are checked when there are at most this many per vertex.
  std::size_t exhaustive_threshold = 1000;
  std::uint64_t seed = 0x5eed;
};

namespace detail {

inline AuditRecord make_record(std::string check, std::string property) {
  AuditRecord r;
  r.check = std::move(check);
  r.property = std::move(property);
  return r;
}

inline void fail(AuditRecord& r, std::vector<Vertex> witness, std::optional<std::size_t> observed, std::string detail) {
  if (!r.passed) return;  // keep the first violation
  r.passed = false;
  r.witness = std::move(witness);
  r.observed = observed;
  r.detail = std::move(detail);
}

/// True iff x lies in a c-clique of G[avail].
inline bool in_clique_within(const Graph& g, Vertex x, std::size_t c, const VertexSet& avail) {
  if (c <= 1) return true;
  VertexSet nb = g.neighbors(x) & avail;
  if (c == 2) return nb.any();
  return find_disjoint_cliques_within(g, nb, 1, c - 1).has_value();
}

inline AuditRecord order_premise(const Graph& g, const FTParams& params) {
  auto r = make_record("order", "graph has exactly pc + k vertices");
  r.instances = 1;
  if (g.order() != params.order())
    fail(r, {}, g.order(), "order " + std::to_string(g.order()) + " != pc + k = " + std::to_string(params.order()));
  return r;
}

inline AuditRecord min_degree_check(const Graph& g, const FTParams& params) {
  auto r = make_record("min_degree", "every vertex has degree >= c + k - 1");
  const std::size_t need = params.c + params.k - 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    ++r.instances;
    if (g.degree(v) < need)
      fail(r, {v}, g.degree(v),
           "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " < " + std::to_string(need));
  }
  return r;
}

inline std::vector<std::vector<Vertex>> separators_of_size(const Graph& g, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  if (k > g.order()) return out;
  Combination comb(g.order(), k);
  do {
    if (is_separator(g, VertexSet::from_range(g.order(), comb.get()))) out.push_back(comb.get());
  } while (comb.advance());
  return out;
}

}  // namespace detail

/// Degree and clique-membership consequences of fault tolerance on pc + k vertices.
inline AuditReport audit_basic(const Graph& g, const FTParams& params, const AuditOptions& opts = {}) {
  params.validate();
  params.require_c_at_least_3();
  const std::size_t n = g.order();
  AuditReport report;
  report.records.push_back(detail::order_premise(g, params));
  report.records.push_back(detail::min_degree_check(g, params));

  auto member = detail::make_record("in_c_clique", "every vertex lies in a c-clique");
  for (Vertex v = 0; v < n; ++v) {
    ++member.instances;
    if (!detail::in_clique_within(g, v, params.c, g.all_vertices()))
      detail::fail(member, {v}, std::nullopt, "vertex " + std::to_string(v) + " lies in no " + std::to_string(params.c) + "-clique");
  }
  report.records.push_back(std::move(member));

  auto survive = detail::make_record("in_c_clique_after_removal",
                                     "every vertex lies in a c-clique of G - S for every k-set S avoiding it");
  std::mt19937_64 rng(opts.seed);
  for (Vertex x = 0; x < n && n >= 1 && params.k <= n - 1; ++x) {
    std::vector<Vertex> others;
    for (Vertex u = 0; u < n; ++u)
      if (u != x) others.push_back(u);
    auto check = [&](const std::vector<Vertex>& s) {
      ++survive.instances;
      VertexSet avail = g.all_vertices() - VertexSet::from_range(n, s);
      if (!detail::in_clique_within(g, x, params.c, avail)) {
        std::vector<Vertex> witness{x};
        witness.insert(witness.end(), s.begin(), s.end());
        detail::fail(survive, std::move(witness), std::nullopt,
                     "vertex " + std::to_string(x) + " lies in no c-clique after removing the listed set");
      }
    };
    const std::size_t total = binomial(others.size(), params.k);
    if (total <= opts.exhaustive_threshold) {
      detail::Combination comb(others.size(), params.k);
      do {
        std::vector<Vertex> s;
        for (Vertex i : comb.get()) s.push_back(others[i]);
        check(s);
      } while (comb.advance());
    } else {
      for (std::size_t t = 0; t < opts.samples_per_vertex; ++t) {
        std::vector<Vertex> s;
        std::sample(others.begin(), others.end(), std::back_inserter(s), params.k, rng);
        check(s);
      }
    }
  }
  report.records.push_back(std::move(survive));
  return report;
}

/// Vertices of degree c + k - 1 have clique closed neighborhoods; a k-separator plus any component of
/// order c is a clique.
inline AuditReport audit_low_degree_cliques(const Graph& g, const FTParams& params) {
  params.validate();
  params.require_c_at_least_3();
  const std::size_t n = g.order();
  AuditReport report;
  report.records.push_back(detail::order_premise(g, params));
  report.records.push_back(detail::min_degree_check(g, params));

  auto closed = detail::make_record("low_degree_closed_neighborhood_clique",
                                    "N[x] is a (c+k)-clique for every x of degree c + k - 1");
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) != params.c + params.k - 1) continue;
    ++closed.instances;
    if (!g.is_clique(closed_neighborhood(g, x)))
      detail::fail(closed, {x}, g.degree(x), "closed neighborhood of vertex " + std::to_string(x) + " is not a clique");
  }
  report.records.push_back(std::move(closed));

  auto sep = detail::make_record("separator_small_component_clique",
                                 "W + V(A) is a clique for every k-separator W and component A of order c");
  for (const auto& w : detail::separators_of_size(g, params.k)) {
    VertexSet ws = VertexSet::from_range(n, w);
    for (const auto& comp : components_within(g, g.all_vertices() - ws)) {
      if (comp.count() != params.c) continue;
      ++sep.instances;
      if (!g.is_clique(comp | ws)) {
        auto witness = (comp | ws).to_vector();
        detail::fail(sep, std::move(witness), std::nullopt, "separator plus order-c component is not a clique");
      }
    }
  }
  report.records.push_back(std::move(sep));
  return report;
}

/// Structure around a size-k separator W: component orders, induced fault tolerance of each side,
/// cliques from every separator vertex into every component, and fullness of every component.
inline AuditReport audit_separator(const Graph& g, const FTParams& params, const std::vector<Vertex>& w,
                                   const VerifyOptions& vopts = {}) {
  params.validate();
  params.require_c_at_least_3();
  params.require_k_below_c();
  const std::size_t n = g.order();
  for (Vertex v : w) g.check_vertex(v);
  VertexSet ws = VertexSet::from_range(n, w);
  if (ws.count() != params.k || w.size() != params.k)
    throw InvalidArgument("separator must have exactly k = " + std::to_string(params.k) + " distinct vertices");
  if (!is_separator(g, ws)) throw InvalidArgument("the given set is not a separator");

  AuditReport report;
  report.records.push_back(detail::order_premise(g, params));
  const auto comps = components_within(g, g.all_vertices() - ws);

  auto orders = detail::make_record("component_order_multiple_of_c", "every component of G - W has order divisible by c");
  auto total = detail::make_record("component_clique_count", "component orders sum to pc");
  auto induced = detail::make_record("component_subgraph_ft", "G[V(A_i) + W] is k-FT(p_i K_c)");
  auto reach = detail::make_record("separator_vertex_clique", "every x in W forms a c-clique with c - 1 vertices of every component");
  auto full = detail::make_record("component_full", "every component has neighborhood exactly W");

  std::size_t sum = 0;
  for (const auto& comp : comps) {
    const std::size_t size = comp.count();
    ++orders.instances;
    if (size % params.c != 0)
      detail::fail(orders, comp.to_vector(), size, "component of order " + std::to_string(size) + " not divisible by c");
    sum += size / params.c;

    if (size % params.c == 0) {
      ++induced.instances;
      auto side = induced_subgraph(g, comp | ws);
      FTParams sub{params.k, size / params.c, params.c};
      auto verdict = verify_ft(side.graph, sub, vopts);
      if (!verdict.holds) {
        std::vector<Vertex> witness;
        for (Vertex v : *verdict.counterexample) witness.push_back(side.original_label[v]);
        detail::fail(induced, std::move(witness), size / params.c,
                     "component side is not k-FT(p_i K_c); witness is a failing removal set");
      }
    }

    for (Vertex x : w) {
      ++reach.instances;
      VertexSet target = g.neighbors(x) & comp;
      bool ok = params.c == 1 || find_disjoint_cliques_within(g, target, 1, params.c - 1).has_value();
      if (!ok) {
        std::vector<Vertex> witness{x};
        auto cv = comp.to_vector();
        witness.insert(witness.end(), cv.begin(), cv.end());
        detail::fail(reach, std::move(witness), std::nullopt,
                     "vertex " + std::to_string(x) + " has no (c-1)-clique of neighbours in the listed component");
      }
    }

    ++full.instances;
    if (!(open_neighborhood(g, comp) == ws))
      detail::fail(full, comp.to_vector(), open_neighborhood(g, comp).count(), "component is not full");
  }
  total.instances = 1;
  if (sum * params.c != n - params.k || sum != params.p)
    detail::fail(total, {}, sum, "sum of p_i is " + std::to_string(sum) + ", expected p = " + std::to_string(params.p));

  for (auto* r : {&orders, &total, &induced, &reach, &full}) report.records.push_back(std::move(*r));
  return report;
}

struct SeparatorAudit {
  std::vector<std::vector<Vertex>> separators;
  AuditReport report;
};

/// audit_separator over every separator of size k, found by exhaustive enumeration.
inline SeparatorAudit audit_all_separators(const Graph& g, const FTParams& params, const VerifyOptions& vopts = {}) {
  params.validate();
  params.require_c_at_least_3();
  params.require_k_below_c();
  SeparatorAudit out;
  out.separators = detail::separators_of_size(g, params.k);
  for (const auto& w : out.separators) out.report.append(audit_separator(g, params, w, vopts));
  return out;
}

struct Recognition {
  bool minimum = false;
  std::string explanation;
};

/// Minimum 1-FT(pK_c) recognition: pc + 1 vertices, connected, every block a K_{c+1}.
inline Recognition recognize_min_1ft(const Graph& g, std::size_t p, std::size_t c) {
  if (p < 1) throw InvalidArgument("p must be >= 1");
  if (c < 3) throw InvalidArgument("recognition requires c >= 3");
  const std::size_t n = g.order();
  if (n != p * c + 1)
    return {false, "order " + std::to_string(n) + " ≠ pc + 1 = " + std::to_string(p * c + 1)};
  auto bd = blocks(g);
  for (const auto& block : bd.blocks) {
    if (block.size() != c + 1)
      return {false, "block of size " + std::to_string(block.size()) + " ≠ " + std::to_string(c + 1)};
    std::size_t m = edges_within(g, block);
    if (m != binomial(c + 1, 2))
      return {false, "block of size " + std::to_string(block.size()) + " has " + std::to_string(m) + " edges ≠ " +
                         std::to_string(binomial(c + 1, 2))};
  }
  if (!is_connected(g)) return {false, "graph is disconnected"};
  return {true, "all " + std::to_string(bd.blocks.size()) + " blocks are K_" + std::to_string(c + 1)};
}

}  // namespace kft
