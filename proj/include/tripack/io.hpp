#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripack/errors.hpp"
#include "tripack/graph.hpp"

namespace tripack {

// ---------------------------------------------------------------------------
// Edge-list format.  First content line is "n m", followed by exactly m
// lines "u v".  Blank lines and lines starting with '#' are ignored.
// ---------------------------------------------------------------------------

namespace detail {

struct NumberedLine {
  std::size_t number;  // 1-based position in the input text
  std::string text;
};

inline std::vector<NumberedLine> content_lines(std::string_view text) {
  std::vector<NumberedLine> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && line[b] != '#') {
      std::size_t e = line.find_last_not_of(" \t\r");
      out.push_back({lineno, std::string(line.substr(b, e - b + 1))});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

inline std::vector<long long> parse_ints(const NumberedLine& line,
                                         std::size_t expected) {
  std::istringstream in(line.text);
  std::vector<long long> vals;
  long long x;
  while (in >> x) vals.push_back(x);
  if (!in.eof() || vals.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " integers",
                     line.number);
  return vals;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty input: missing \"n m\" header");
  auto header = detail::parse_ints(lines[0], 2);
  long long n = header[0], m = header[1];
  if (n < 0 || n > Graph::kMaxVertices)
    throw ParseError("vertex count must be between 0 and 64", lines[0].number);
  if (m < 0) throw ParseError("negative edge count", lines[0].number);
  if (static_cast<long long>(lines.size()) - 1 < m) {
    std::size_t last = lines.back().number;
    throw ParseError("header declares " + std::to_string(m) +
                         " edges but only " +
                         std::to_string(lines.size() - 1) + " edge lines found",
                     last);
  }
  if (static_cast<long long>(lines.size()) - 1 > m)
    throw ParseError("unexpected extra line after " + std::to_string(m) +
                         " edges",
                     lines[static_cast<std::size_t>(m) + 1].number);
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    const auto& line = lines[static_cast<std::size_t>(i) + 1];
    auto uv = detail::parse_ints(line, 2);
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
      throw ParseError("edge endpoint out of range 0.." + std::to_string(n - 1),
                       line.number);
    if (uv[0] == uv[1]) throw ParseError("self loop", line.number);
    edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
  }
  // Duplicate edges collapse inside the Graph constructor.
  return Graph(static_cast<int>(n), edges);
}

inline std::string format_edge_list(const Graph& g,
                                    const std::string& comment = "") {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << "\n";
  for (auto [u, v] : es) out << u << ' ' << v << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// graph6, header-less short form (n <= 62).  First byte encodes n+63; the
// upper triangle follows column by column, packed into 6-bit groups, each
// offset by 63.
// ---------------------------------------------------------------------------

inline std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw SizeError("graph6 short form supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126)
      throw ParseError("invalid graph6 character (byte outside 63..126)");
  if (s[0] == '~')
    throw ParseError("extended graph6 size prefix '~' is not supported");
  int n = s[0] - 63;
  long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  std::size_t want = static_cast<std::size_t>((pairs + 5) / 6);
  if (s.size() - 1 < want) throw ParseError("graph6 payload truncated");
  if (s.size() - 1 > want) throw ParseError("graph6 payload has extra bytes");
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = s[static_cast<std::size_t>(1 + bit / 6)] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  // Bits past the last pair are padding and must be zero.
  for (; bit < static_cast<long long>(want) * 6; ++bit) {
    int byte = s[static_cast<std::size_t>(1 + bit / 6)] - 63;
    if ((byte >> (5 - bit % 6)) & 1)
      throw ParseError("graph6 padding bits must be zero");
  }
  return Graph(n, edges);
}

// Accepts either format: a content line starting with a digit is an
// edge-list header, anything else is a graph6 line.
inline Graph parse_graph_auto(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  if (!lines[0].text.empty() &&
      std::isdigit(static_cast<unsigned char>(lines[0].text[0])))
    return parse_edge_list(text);
  if (lines.size() > 1)
    throw ParseError("unexpected extra line after graph6 data",
                     lines[1].number);
  return parse_graph6(lines[0].text);
}

}  // namespace tripack
