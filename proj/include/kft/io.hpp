#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kft/error.hpp"
#include "kft/graph.hpp"

namespace kft {

enum class GraphFormat { edge_list, graph6 };

// Edge list: header "n m", then m lines "u v" with 0-indexed endpoints.

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: malformed header, expected \"n m\"");
  GraphBuilder b(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: endpoint out of range in edge " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ParseError("edge list: self-loop at vertex " + std::to_string(u));
    if (b.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw ParseError("edge list: trailing content \"" + extra + "\"");
  return std::move(b).build();
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// graph6: N(n) followed by the upper triangle read column by column (x(0,1), x(0,2), x(1,2), ...),
// packed six bits per byte, most significant first, each byte offset by 63.

inline constexpr std::size_t graph6_max_order = 258047;

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > graph6_max_order) throw LimitExceeded("graph6 supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
  }
  unsigned group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char ch : text) {
    auto b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) throw ParseError("graph6: invalid byte " + std::to_string(static_cast<int>(b)));
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size field");
    if (static_cast<unsigned char>(text[1]) == 126) throw ParseError("graph6: orders above 258047 are not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for order " + std::to_string(n) +
                     ", got " + std::to_string(text.size() - pos));
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      unsigned byte = static_cast<unsigned>(text[pos + bit / 6] - 63);
      if ((byte >> (5 - bit % 6)) & 1U) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    unsigned last = static_cast<unsigned>(text.back() - 63);
    if (last & ((1U << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

/// Edge list when the first line holds two integers, graph6 otherwise.
inline GraphFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string first;
  std::getline(in, first);
  std::istringstream ls(first);
  long long a, b;
  std::string extra;
  if ((ls >> a >> b) && !(ls >> extra)) return GraphFormat::edge_list;
  return GraphFormat::graph6;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

inline std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::edge_list ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

inline Graph read_graph(std::istream& in, std::optional<GraphFormat> format = std::nullopt) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph(text, format ? *format : detect_format(text));
}

}  // namespace kft
