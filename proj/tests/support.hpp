#pragma once

// Reference implementations used to referee the library under test.  Each is
// written straight from the definition on a different code path (adjacency
// matrices, triple loops, subset scans) so a shared bug is unlikely.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tripack/graph.hpp"

namespace testsupport {

inline std::vector<std::vector<bool>> adjacency_matrix(const tripack::Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) adj[u][v] = g.adjacent(u, v);
  return adj;
}

// graph6 straight from the format definition: N(n) header, then the upper
// triangle read column by column (x_{0,1}, x_{0,2}, x_{1,2}, ...), packed
// big-endian into 6-bit groups, zero padded, each group offset by 63.
inline std::string ref_graph6(const std::vector<std::vector<bool>>& adj) {
  int n = static_cast<int>(adj.size());
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  std::vector<int> bitstream;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) bitstream.push_back(adj[row][col] ? 1 : 0);
  while (bitstream.size() % 6 != 0) bitstream.push_back(0);
  for (std::size_t i = 0; i < bitstream.size(); i += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bitstream[i + b];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

inline std::string ref_graph6(const tripack::Graph& g) {
  return ref_graph6(adjacency_matrix(g));
}

inline std::int64_t brute_triangles(const tripack::Graph& g) {
  int n = g.vertex_count();
  std::int64_t count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++count;
  return count;
}

inline int brute_max_clique(const tripack::Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (sub >> v & 1) vs.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
        if (!g.adjacent(vs[i], vs[j])) clique = false;
    if (clique) best = std::max(best, static_cast<int>(vs.size()));
  }
  return best;
}

namespace detail {

struct PackRec {
  const std::vector<std::array<int, 3>>& tris;
  std::vector<std::vector<bool>> used;
  int best = 0;

  void go(std::size_t i, int have) {
    if (have + static_cast<int>(tris.size() - i) <= best) return;
    if (i == tris.size()) {
      best = std::max(best, have);
      return;
    }
    const auto& t = tris[i];
    bool free_edges = !used[t[0]][t[1]] && !used[t[0]][t[2]] && !used[t[1]][t[2]];
    if (free_edges) {
      used[t[0]][t[1]] = used[t[0]][t[2]] = used[t[1]][t[2]] = true;
      used[t[1]][t[0]] = used[t[2]][t[0]] = used[t[2]][t[1]] = true;
      go(i + 1, have + 1);
      used[t[0]][t[1]] = used[t[0]][t[2]] = used[t[1]][t[2]] = false;
      used[t[1]][t[0]] = used[t[2]][t[0]] = used[t[2]][t[1]] = false;
    }
    go(i + 1, have);
  }
};

}  // namespace detail

// Take-or-skip search over the triangle list with an edge-usage matrix.
// Intended for small graphs only.
inline int brute_max_packing(const tripack::Graph& g) {
  int n = g.vertex_count();
  std::vector<std::array<int, 3>> tris;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))
          tris.push_back({a, b, c});
  detail::PackRec rec{tris, std::vector<std::vector<bool>>(
                                std::max(n, 1), std::vector<bool>(std::max(n, 1), false))};
  rec.go(0, 0);
  return rec.best;
}

// Reference maximum bipartite matching size: augmenting search written
// independently of the library's matching code.
inline int brute_matching_size(int a_count, int b_count,
                               const std::vector<std::vector<bool>>& can_pair) {
  std::vector<int> owner(b_count, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int a) -> bool {
    for (int b = 0; b < b_count; ++b) {
      if (!can_pair[a][b] || seen[b]) continue;
      seen[b] = 1;
      if (owner[b] < 0 || self(self, owner[b])) {
        owner[b] = a;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int a = 0; a < a_count; ++a) {
    seen.assign(b_count, 0);
    if (augment(augment, a)) ++size;
  }
  return size;
}

inline tripack::Graph make_graph(int n,
                                 std::initializer_list<std::pair<int, int>> edges) {
  return tripack::Graph(n, std::vector<std::pair<int, int>>(edges));
}

inline tripack::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return tripack::Graph(n, e);
}

inline tripack::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return tripack::Graph(n, e);
}

inline tripack::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return tripack::Graph(n, e);
}

// Vertices 0..a-1 on one side, a..a+b-1 on the other.
inline tripack::Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return tripack::Graph(a + b, e);
}

// Parts {0,1}, {2,3}, {4,5}.
inline tripack::Graph octahedron() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 1 || u % 2 != 0) e.emplace_back(u, v);
  return tripack::Graph(6, e);
}

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// Calls fn on every labeled graph with n vertices.
template <typename F>
void for_all_graphs(int n, F fn) {
  auto pairs = vertex_pairs(n);
  std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) e.push_back(pairs[i]);
    fn(tripack::Graph(n, e));
  }
}

}  // namespace testsupport
