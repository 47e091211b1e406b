#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tripack/errors.hpp"

namespace tripack {

namespace bits {

inline std::uint64_t one(int v) { return std::uint64_t{1} << v; }

// Mask of all bits strictly above v.
inline std::uint64_t above(int v) {
  return v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1);
}

inline std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

template <typename F>
inline void for_each(std::uint64_t m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> to_vector(std::uint64_t m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  for_each(m, [&](int v) { out.push_back(v); });
  return out;
}

inline std::uint64_t from_vector(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= one(v);
  return m;
}

}  // namespace bits

// Simple undirected graph on vertices 0..n-1, n <= 64, stored as one
// adjacency bitmask per vertex.  Value type; all operations that "modify"
// a graph return a new one.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) { init(n); }

  Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    init(n);
    for (auto [u, v] : edge_list) add_edge_checked(u, v);
    recount_edges();
  }

  // Builds directly from adjacency rows; rows must be symmetric and
  // self-loop free.
  static Graph from_adjacency(int n, const std::vector<std::uint64_t>& rows) {
    Graph g;
    g.init(n);
    if (static_cast<int>(rows.size()) != n)
      throw PreconditionError("adjacency row count does not match n");
    std::uint64_t full = bits::low_mask(n);
    for (int v = 0; v < n; ++v) {
      if (rows[v] & ~full)
        throw PreconditionError("adjacency row has bits outside 0..n-1");
      if (rows[v] & bits::one(v)) throw PreconditionError("self loop");
      g.rows_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
      bits::for_each(g.rows_[v], [&](int u) {
        if (!(g.rows_[u] & bits::one(v)))
          throw PreconditionError("adjacency rows are not symmetric");
      });
    g.recount_edges();
    return g;
  }

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return e_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] & bits::one(v)) != 0;
  }

  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[v]);
  }

  std::uint64_t vertex_mask() const { return bits::low_mask(n_); }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(e_));
    for (int u = 0; u < n_; ++u)
      bits::for_each(rows_[u] & bits::above(u),
                     [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  bool operator==(const Graph& o) const = default;

 private:
  void init(int n) {
    if (n < 0 || n > kMaxVertices)
      throw SizeError("vertex count must be between 0 and 64");
    n_ = n;
    rows_.assign(static_cast<std::size_t>(n), 0);
    e_ = 0;
  }

  void add_edge_checked(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self loop");
    rows_[u] |= bits::one(v);
    rows_[v] |= bits::one(u);
  }

  void recount_edges() {
    std::int64_t d = 0;
    for (int v = 0; v < n_; ++v) d += std::popcount(rows_[v]);
    e_ = d / 2;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex out of range");
  }

  int n_ = 0;
  std::int64_t e_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Vertex triple with a < b < c.
struct Triangle {
  std::array<int, 3> v;

  Triangle(int a, int b, int c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
      throw PreconditionError("triangle with repeated vertex");
  }

  auto operator<=>(const Triangle&) const = default;
};

// All triangles in lexicographic order of their sorted vertex triples.
inline std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    std::uint64_t nu = g.neighbors(u) & bits::above(u);
    bits::for_each(nu, [&](int v) {
      std::uint64_t common = nu & g.neighbors(v) & bits::above(v);
      bits::for_each(common, [&](int w) { out.emplace_back(u, v, w); });
    });
  }
  return out;
}

inline std::int64_t triangle_count(const Graph& g) {
  std::int64_t t = 0;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    std::uint64_t nu = g.neighbors(u) & bits::above(u);
    bits::for_each(nu, [&](int v) {
      t += std::popcount(nu & g.neighbors(v) & bits::above(v));
    });
  }
  return t;
}

// Number of triangles containing v, i.e. edges spanned by N(v).
inline std::int64_t triangle_count_at(const Graph& g, int v) {
  std::uint64_t nv = g.neighbors(v);
  std::int64_t t = 0;
  bits::for_each(nv, [&](int u) {
    t += std::popcount(nv & g.neighbors(u) & bits::above(u));
  });
  return t;
}

namespace detail {

// True iff every pair inside `mask` is adjacent.
inline bool is_clique(const Graph& g, std::uint64_t mask) {
  bool ok = true;
  bits::for_each(mask, [&](int v) {
    if ((g.neighbors(v) & mask) != (mask & ~bits::one(v))) ok = false;
  });
  return ok;
}

// True iff `cand` contains a clique with `want` vertices.
inline bool exists_clique(const Graph& g, std::uint64_t cand, int want) {
  if (want <= 0) return true;
  while (cand) {
    if (std::popcount(cand) < want) return false;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (exists_clique(g, cand & g.neighbors(v), want - 1)) return true;
  }
  return false;
}

inline int max_clique_size_rec(const Graph& g, std::uint64_t cand, int best) {
  while (cand) {
    if (std::popcount(cand) <= best) break;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    int s = 1 + max_clique_size_rec(g, cand & g.neighbors(v),
                                    best > 0 ? best - 1 : 0);
    if (s > best) best = s;
  }
  return best;
}

inline int max_clique_size(const Graph& g, std::uint64_t cand) {
  return max_clique_size_rec(g, cand, 0);
}

// Lexicographically smallest clique of exactly `size` vertices inside
// `mask`.  Precondition: such a clique exists.
inline std::uint64_t lex_smallest_clique(const Graph& g, std::uint64_t mask,
                                         int size) {
  std::uint64_t clique = 0;
  std::uint64_t cand = mask;
  for (int left = size; left > 0; --left) {
    bool found = false;
    std::uint64_t scan = cand;
    while (scan && !found) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      std::uint64_t next = cand & g.neighbors(v) & bits::above(v);
      if (exists_clique(g, next, left - 1)) {
        clique |= bits::one(v);
        cand = next;
        found = true;
      }
    }
    if (!found)
      throw InternalError("lex_smallest_clique: no clique of requested size");
  }
  return clique;
}

}  // namespace detail

// True iff g has no complete subgraph on m+1 vertices.  Small m uses the
// direct scans; the general case falls back to backtracking.
inline bool clique_number_at_most(const Graph& g, int m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  if (m >= g.vertex_count()) return true;
  if (m == 1) return g.edge_count() == 0;
  if (m == 2) return triangle_count(g) == 0;
  if (m == 3) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      std::uint64_t nu = g.neighbors(u) & bits::above(u);
      bool found = false;
      bits::for_each(nu, [&](int v) {
        if (found) return;
        std::uint64_t common = nu & g.neighbors(v) & bits::above(v);
        bits::for_each(common, [&](int x) {
          if (common & g.neighbors(x) & bits::above(x)) found = true;
        });
      });
      if (found) return false;
    }
    return true;
  }
  return !detail::exists_clique(g, g.vertex_mask(), m + 1);
}

inline int clique_number(const Graph& g) {
  return detail::max_clique_size(g, g.vertex_mask());
}

struct VertexStats {
  int degree = 0;
  std::int64_t local_triangles = 0;  // triangles containing the vertex
  std::int64_t objective = 0;        // r0 * degree - local_triangles
};

inline VertexStats vertex_stats(const Graph& g, int v, std::int64_t r0) {
  VertexStats s;
  s.degree = g.degree(v);
  s.local_triangles = triangle_count_at(g, v);
  s.objective = r0 * s.degree - s.local_triangles;
  return s;
}

// New graph in which `target` gets exactly the neighborhood of `source`.
// The two must be distinct and non-adjacent, so afterwards they are
// non-adjacent twins.
inline Graph replace_by_copy(const Graph& g, int target, int source) {
  if (target == source)
    throw PreconditionError("replace_by_copy: target equals source");
  if (g.adjacent(target, source))
    throw PreconditionError("replace_by_copy: target adjacent to source");
  int n = g.vertex_count();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  std::uint64_t src_row = g.neighbors(source);
  for (int w = 0; w < n; ++w) {
    std::uint64_t row = g.neighbors(w) & ~bits::one(target);
    if (src_row & bits::one(w)) row |= bits::one(target);
    rows[static_cast<std::size_t>(w)] = row;
  }
  rows[static_cast<std::size_t>(target)] = src_row;
  return Graph::from_adjacency(n, rows);
}

// Part sizes (non-decreasing) when g is complete multipartite, i.e. every
// vertex is adjacent to exactly the vertices outside its own part.
inline std::optional<std::vector<int>> complete_multipartite_parts(
    const Graph& g) {
  int n = g.vertex_count();
  std::uint64_t full = g.vertex_mask();
  std::vector<int> sizes;
  std::uint64_t seen = 0;
  for (int v = 0; v < n; ++v) {
    if (seen & bits::one(v)) continue;
    std::uint64_t part = full & ~g.neighbors(v);
    bool consistent = true;
    bits::for_each(part, [&](int u) {
      if (g.neighbors(u) != g.neighbors(v)) consistent = false;
    });
    if (!consistent) return std::nullopt;
    seen |= part;
    sizes.push_back(std::popcount(part));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace tripack
