#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

namespace kft {

using Vertex = std::size_t;
inline constexpr Vertex npos = std::numeric_limits<Vertex>::max();

/// Vertex set over a universe of at most 64 vertices, one machine word.
class SmallSet {
 public:
  static constexpr std::size_t capacity = 64;

  constexpr SmallSet() = default;
  constexpr explicit SmallSet(std::uint64_t bits) : bits_(bits) {}
  SmallSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static SmallSet empty_set(std::size_t /*universe*/) { return SmallSet{}; }
  static SmallSet full(std::size_t universe) {
    return SmallSet(universe >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1));
  }

  bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool any() const { return bits_ != 0; }

  Vertex first() const { return bits_ ? static_cast<Vertex>(std::countr_zero(bits_)) : npos; }
  /// Least member strictly greater than v.
  Vertex next(Vertex v) const {
    if (v >= 63) return npos;
    std::uint64_t rest = bits_ & (~std::uint64_t{0} << (v + 1));
    return rest ? static_cast<Vertex>(std::countr_zero(rest)) : npos;
  }
  /// Members strictly greater than v.
  SmallSet above(Vertex v) const {
    if (v >= 63) return SmallSet{};
    return SmallSet(bits_ & (~std::uint64_t{0} << (v + 1)));
  }

  bool intersects(const SmallSet& o) const { return (bits_ & o.bits_) != 0; }
  bool subset_of(const SmallSet& o) const { return (bits_ & ~o.bits_) == 0; }

  SmallSet& operator&=(const SmallSet& o) { bits_ &= o.bits_; return *this; }
  SmallSet& operator|=(const SmallSet& o) { bits_ |= o.bits_; return *this; }
  SmallSet& operator-=(const SmallSet& o) { bits_ &= ~o.bits_; return *this; }
  friend SmallSet operator&(SmallSet a, const SmallSet& b) { return a &= b; }
  friend SmallSet operator|(SmallSet a, const SmallSet& b) { return a |= b; }
  friend SmallSet operator-(SmallSet a, const SmallSet& b) { return a -= b; }
  friend bool operator==(const SmallSet&, const SmallSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
  }

  std::uint64_t bits() const { return bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Vertex set over an arbitrary universe; a dense bitset sized to the universe.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet empty_set(std::size_t universe) { return VertexSet(universe); }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }
  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const { return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U); }
  void insert(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(Vertex v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  bool any() const { return !empty(); }

  Vertex first() const { return scan_from(0); }
  Vertex next(Vertex v) const { return v + 1 >= universe_ ? npos : scan_from(v + 1); }
  VertexSet above(Vertex v) const {
    VertexSet s(*this);
    for (Vertex u = 0; u <= v && u < universe_; ++u) s.erase(u);
    return s;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t w = 0; w < std::min(words_.size(), o.words_.size()); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t other = w < o.words_.size() ? o.words_[w] : 0;
      if (words_[w] & ~other) return false;
    }
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= w < o.words_.size() ? o.words_[w] : 0;
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < std::min(words_.size(), o.words_.size()); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < std::min(words_.size(), o.words_.size()); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.to_vector() == b.to_vector();
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t b = words_[w]; b; b &= b - 1)
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(b))));
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  SmallSet to_small() const { return SmallSet(words_.empty() ? 0 : words_[0]); }
  static VertexSet from_small(std::size_t universe, SmallSet s) {
    VertexSet out(universe);
    s.for_each([&](Vertex v) { out.insert(v); });
    return out;
  }

 private:
  Vertex scan_from(Vertex start) const {
    for (std::size_t w = start / 64; w < words_.size(); ++w) {
      std::uint64_t b = words_[w];
      if (w == start / 64) b &= ~std::uint64_t{0} << (start % 64);
      if (b) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    }
    return npos;
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic comparison of two sets by their sorted member lists.
inline bool lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace kft
