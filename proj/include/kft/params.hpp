#pragma once

#include <cstddef>
#include <string>

#include "kft/error.hpp"

namespace kft {

constexpr std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

/// Fault budget k, clique count p and clique order c.
struct FTParams {
  std::size_t k = 0;
  std::size_t p = 1;
  std::size_t c = 2;

  /// Throws unless p >= 1 and c >= 2.
  void validate() const {
    if (p < 1) throw InvalidArgument("p must be >= 1");
    if (c < 2) throw InvalidArgument("c must be >= 2");
  }
  void require_c_at_least_3() const {
    if (c < 3) throw InvalidArgument("requires c >= 3, got c = " + std::to_string(c));
  }
  void require_k_below_c() const {
    if (k >= c) throw InvalidArgument("requires k < c, got k = " + std::to_string(k) + ", c = " + std::to_string(c));
  }

  /// pc + k, the order of the graphs whose minimum edge count is studied.
  std::size_t order() const { return p * c + k; }

  /// (C(c,2) + ck) p + C(k,2): edges of the star construction.
  std::size_t star_edge_count() const { return (binomial(c, 2) + c * k) * p + binomial(k, 2); }

  /// ceil((pc+k)(c+k-1)/2): every vertex of a k-FT(pK_c) graph on pc+k vertices has degree >= c+k-1.
  std::size_t degree_sum_lower_bound() const { return (order() * (c + k - 1) + 1) / 2; }

  friend bool operator==(const FTParams&, const FTParams&) = default;

  std::string to_string() const {
    return "(k=" + std::to_string(k) + ", p=" + std::to_string(p) + ", c=" + std::to_string(c) + ")";
  }
};

}  // namespace kft
