#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "kft/graph.hpp"

namespace kft {

inline constexpr std::size_t default_canonical_limit = 16;

/// Isomorphism certificate: the upper-triangle adjacency bits under a canonical labeling.
struct CanonicalForm {
  std::size_t n = 0;
  std::vector<std::uint64_t> certificate;
  /// labeling[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> labeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.certificate == b.certificate;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return std::lexicographical_compare_three_way(a.certificate.begin(), a.certificate.end(),
                                                  b.certificate.begin(), b.certificate.end());
  }
};

namespace detail {

/// Individualization-refinement search keeping the greatest leaf certificate.
/// Prunes with automorphisms found at equivalent leaves: orbit pruning at each node using the
/// automorphisms that fix the node's individualized prefix, and backjumping to the point of
/// divergence from the first or best path.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), rows_(g.small_rows()) {}

  CanonicalForm run() {
    std::vector<std::vector<Vertex>> cells;
    if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells[0].begin(), cells[0].end(), Vertex{0});
    }
    refine(cells);
    search(cells);
    return {n_, best_cert_, best_lab_};
  }

 private:
  using Cells = std::vector<std::vector<Vertex>>;
  using Cert = std::vector<std::uint64_t>;

  std::size_t neighbors_in(Vertex v, std::uint64_t mask) const {
    return static_cast<std::size_t>(std::popcount(rows_[v].bits() & mask));
  }

  /// Equitable refinement: split cells by neighbor counts into every cell until stable.
  void refine(Cells& cells) const {
    for (;;) {
      std::vector<std::uint64_t> masks;
      masks.reserve(cells.size());
      for (const auto& cell : cells) {
        std::uint64_t m = 0;
        for (Vertex v : cell) m |= std::uint64_t{1} << v;
        masks.push_back(m);
      }
      Cells next;
      next.reserve(n_);
      bool split = false;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::size_t> sig(masks.size());
          for (std::size_t j = 0; j < masks.size(); ++j) sig[j] = neighbors_in(v, masks[j]);
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t begin = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[begin].first) {
            std::vector<Vertex> part;
            for (std::size_t t = begin; t < i; ++t) part.push_back(keyed[t].second);
            next.push_back(std::move(part));
            begin = i;
          }
        }
        if (next.back().size() != cell.size()) split = true;
      }
      cells = std::move(next);
      if (!split) return;
    }
  }

  Cert certificate_of(const std::vector<Vertex>& lab) const {
    Cert cert((n_ * (n_ - 1) / 2 + 63) / 64, 0);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j, ++bit)
        if (rows_[lab[i]].contains(lab[j])) cert[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
    return cert;
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(n_);
    for (std::size_t i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  /// Orbit representative of each vertex under automorphisms fixing `prefix` pointwise.
  std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  /// Returns the depth to unwind to, or npos to continue normally.
  std::size_t search(const Cells& cells) {
    const std::size_t depth = path_.size();
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return at_leaf(cells);

    const std::size_t target_index = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex v : *target) {
      if (!tried.empty()) {
        auto orbit = orbits_fixing(path_);
        bool redundant = std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return orbit[u] == orbit[v]; });
        if (redundant) continue;
      }
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target_index) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : cells[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(child);
      path_.push_back(v);
      std::size_t jump = search(child);
      path_.pop_back();
      if (jump != npos && jump < depth) return jump;
    }
    return npos;
  }

  std::size_t at_leaf(const Cells& cells) {
    std::vector<Vertex> lab;
    lab.reserve(n_);
    for (const auto& c : cells) lab.push_back(c.front());
    Cert cert = certificate_of(lab);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = path_;
      return npos;
    }
    if (cert == first_cert_) {
      record_automorphism(first_lab_, lab);
      return common_prefix(path_, first_path_);
    }
    if (cert == best_cert_) {
      record_automorphism(best_lab_, lab);
      return common_prefix(path_, best_path_);
    }
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
      best_path_ = path_;
    }
    return npos;
  }

  std::size_t n_;
  std::vector<SmallSet> rows_;
  std::vector<Vertex> path_;
  bool have_first_ = false;
  Cert first_cert_, best_cert_;
  std::vector<Vertex> first_lab_, best_lab_, first_path_, best_path_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

/// Permutation-invariant certificate; equal iff the graphs are isomorphic.
inline CanonicalForm canonical_form(const Graph& g, std::size_t max_order = default_canonical_limit) {
  if (g.order() > max_order)
    throw LimitExceeded("canonical form limited to " + std::to_string(max_order) + " vertices, got " +
                        std::to_string(g.order()));
  if (g.order() == 0) return {};
  return detail::Canonizer(g).run();
}

/// The graph relabeled so vertex i is form.labeling[i].
inline Graph canonical_graph(const Graph& g, const CanonicalForm& form) {
  std::vector<Vertex> position(g.order());
  for (std::size_t i = 0; i < form.labeling.size(); ++i) position[form.labeling[i]] = i;
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(position[u], position[v]);
  return std::move(b).build();
}

inline bool isomorphic(const Graph& a, const Graph& b, std::size_t max_order = default_canonical_limit) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace kft
