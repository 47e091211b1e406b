#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tripack/errors.hpp"
#include "tripack/graph.hpp"
#include "tripack/oracle.hpp"

namespace tripack {
namespace gen {

// Balanced complete bipartite graph on n vertices: parts 0..floor(n/2)-1
// and the rest.  Edge count is floor(n^2/4), the extremal triangle-free
// value.
inline Graph turan2(int n) {
  if (n < 1) throw PreconditionError("turan2: n must be >= 1");
  if (n > Graph::kMaxVertices) throw SizeError("turan2: n exceeds 64");
  int a = n / 2;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < n; ++v) edges.emplace_back(u, v);
  Graph g(n, edges);
  std::int64_t nn = n;
  if (g.edge_count() != nn * nn / 4)
    throw InternalError("turan2: edge count mismatch");
  return g;
}

// Complete multipartite graph; vertices are numbered part by part.
// Edge and triangle counts are the elementary symmetric polynomials e2
// and e3 of the part sizes; both are verified against an independent
// recount before returning.
inline Graph complete_multipartite(const std::vector<int>& sizes) {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= 0)
      throw PreconditionError("complete_multipartite: sizes must be positive");
    if (i > 0 && sizes[i] < sizes[i - 1])
      throw PreconditionError(
          "complete_multipartite: sizes must be non-decreasing");
    n += sizes[i];
  }
  if (n > Graph::kMaxVertices)
    throw SizeError("complete_multipartite: total size exceeds 64");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[i]),
                   static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] !=
          part_of[static_cast<std::size_t>(v)])
        edges.emplace_back(u, v);
  Graph g(static_cast<int>(n), edges);

  std::int64_t e2 = 0, e3 = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      e2 += static_cast<std::int64_t>(sizes[i]) * sizes[j];
      for (std::size_t m = j + 1; m < sizes.size(); ++m)
        e3 += static_cast<std::int64_t>(sizes[i]) * sizes[j] * sizes[m];
    }
  auto rc = oracle::recount(g);
  if (rc.edges != e2 || rc.triangles != e3)
    throw InternalError("complete_multipartite: count formulas violated");
  return g;
}

// Complete bipartite K_{r, n-r} with an arbitrary triangle-free graph
// embedded in the right side.  Left side is 0..r-1; inner vertex i maps to
// r+i.  The result is K4-free, and when r equals the inner size the
// maximum packing meets the ceil(k) bound with equality.
inline Graph equality_family(int r, const Graph& inner) {
  if (r < 1) throw PreconditionError("equality_family: r must be >= 1");
  if (triangle_count(inner) != 0)
    throw PreconditionError("equality_family: inner graph has a triangle");
  int n = r + inner.vertex_count();
  if (n > Graph::kMaxVertices)
    throw SizeError("equality_family: total size exceeds 64");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < r; ++u)
    for (int v = r; v < n; ++v) edges.emplace_back(u, v);
  for (auto [u, v] : inner.edges()) edges.emplace_back(r + u, r + v);
  Graph g(n, edges);
  if (!clique_number_at_most(g, 3))
    throw InternalError("equality_family: output has a K4");
  return g;
}

namespace detail {

// 53-bit uniform draw in [0, 1); mt19937_64 keeps this reproducible.
inline double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

struct RandomK4Free {
  Graph graph;
  std::vector<int> part_sizes;  // the 3-partite skeleton used
};

// Random subgraph of a complete 3-partite graph with balanced-ish random
// part sizes; each cross edge is kept independently with probability
// edge_prob.  K4-free by construction and fully determined by the seed.
inline RandomK4Free random_k4_free(int n, double edge_prob,
                                   std::uint64_t seed) {
  if (n < 0) throw PreconditionError("random_k4_free: n must be >= 0");
  if (n > Graph::kMaxVertices) throw SizeError("random_k4_free: n exceeds 64");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw PreconditionError("random_k4_free: edge_prob must be in [0, 1]");
  std::mt19937_64 rng(seed);
  int base = n / 3;
  std::vector<int> sizes{base + (n % 3 > 0 ? 1 : 0), base + (n % 3 > 1 ? 1 : 0),
                         base};
  // Up to two random +-1 transfers keep the parts balanced-ish but varied.
  for (int step = 0; step < 2; ++step) {
    int from = static_cast<int>(rng() % 3);
    int to = static_cast<int>(rng() % 3);
    if (from != to && sizes[static_cast<std::size_t>(from)] > 0) {
      --sizes[static_cast<std::size_t>(from)];
      ++sizes[static_cast<std::size_t>(to)];
    }
  }
  std::vector<int> part_of;
  for (int i = 0; i < 3; ++i)
    part_of.insert(part_of.end(),
                   static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]),
                   i);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] ==
          part_of[static_cast<std::size_t>(v)])
        continue;
      if (detail::unit_draw(rng) < edge_prob) edges.emplace_back(u, v);
    }
  RandomK4Free out{Graph(n, edges), sizes};
  if (!clique_number_at_most(out.graph, 3))
    throw InternalError("random_k4_free: output has a K4");
  return out;
}

}  // namespace gen
}  // namespace tripack
