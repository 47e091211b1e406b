#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tripack/errors.hpp"
#include "tripack/graph.hpp"
#include "tripack/partition.hpp"

namespace tripack {

// Exact multiple of 1/4, stored as four times the value.  Every quantity
// derived from e - n^2/4 lives on this grid, so no floating point is
// needed anywhere.
struct QuarterInt {
  std::int64_t q = 0;  // q = 4 * value

  auto operator<=>(const QuarterInt&) const = default;

  double value() const { return static_cast<double>(q) / 4.0; }

  // Smallest integer >= value, correct for negative values too.
  std::int64_t ceil() const {
    std::int64_t a = q + 3;
    return a >= 0 ? a / 4 : -((-a + 3) / 4);
  }
};

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw PreconditionError("ceil_div: divisor must be positive");
  return a >= 0 ? (a + b - 1) / b : -(-a / b);
}

// k with e = n^2/4 + k, i.e. 4k = 4e - n^2.
inline QuarterInt k_value(const Graph& g) {
  std::int64_t n = g.vertex_count();
  return {4 * g.edge_count() - n * n};
}

// f = r(e - n^2/4) - t.  Non-positive for every graph and every greedy
// partition size r; the whole pipeline exists to certify that.
inline QuarterInt f_value(const Graph& g, std::int64_t r) {
  if (r < 0) throw PreconditionError("f_value: r must be >= 0");
  std::int64_t n = g.vertex_count();
  return {r * (4 * g.edge_count() - n * n) - 4 * triangle_count(g)};
}

// g = r(e - r(n-r)) - t, an integer; g >= f since r(n-r) <= n^2/4.
inline QuarterInt g_value(const Graph& g, std::int64_t r) {
  if (r < 0) throw PreconditionError("g_value: r must be >= 0");
  std::int64_t n = g.vertex_count();
  return {4 * (r * g.edge_count() - r * r * (n - r) - triangle_count(g))};
}

// Closed form of g for a complete multipartite graph with the given part
// sizes (non-decreasing) and r = biggest part: minus the sum of all
// products of three distinct part sizes that avoid the biggest part.
// Never positive; zero when there are at most three parts.
inline std::int64_t multipartite_g(const std::vector<std::int64_t>& sizes) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= 0)
      throw PreconditionError("multipartite_g: part sizes must be positive");
    if (i > 0 && sizes[i] < sizes[i - 1])
      throw PreconditionError("multipartite_g: sizes must be non-decreasing");
  }
  std::int64_t sum = 0;
  std::size_t l = sizes.size();
  if (l >= 4)
    for (std::size_t i = 0; i + 2 < l - 1; ++i)
      for (std::size_t j = i + 1; j + 1 < l - 1; ++j)
        for (std::size_t m = j + 1; m < l - 1; ++m)
          sum += sizes[i] * sizes[j] * sizes[m];
  return -sum;
}

// e <= r(n-r) + r2(n-r-r2) where r2 counts cliques of size >= 2.
// Holds for every K4-free graph with a greedy partition.
inline bool claim_r2_check(const Graph& g, const GreedyPartition& p) {
  if (!clique_number_at_most(g, 3))
    throw PreconditionError("claim_r2_check: graph has a K4");
  if (!validate_greedy(g, p))
    throw PreconditionError("claim_r2_check: partition is not greedy");
  std::int64_t n = g.vertex_count();
  std::int64_t r = p.size();
  std::int64_t r2 = 0;
  for (const auto& c : p.cliques)
    if (c.size() >= 2) ++r2;
  return g.edge_count() <= r * (n - r) + r2 * (n - r - r2);
}

// e <= r(n-r) for triangle-free graphs; the size-2 cliques of any greedy
// partition form a non-augmentable matching, which is all the proof needs.
inline bool trianglefree_check(const Graph& g, const GreedyPartition& p) {
  if (triangle_count(g) != 0)
    throw PreconditionError("trianglefree_check: graph has a triangle");
  if (!validate_greedy(g, p))
    throw PreconditionError("trianglefree_check: partition is not greedy");
  std::int64_t n = g.vertex_count();
  std::int64_t r = p.size();
  return g.edge_count() <= r * (n - r);
}

// Probe for the open bound t >= r(e - r(n-r)).  Pure arithmetic; a false
// return is a counterexample candidate worth reporting, not an error.
inline bool conjecture_nice_check(const Graph& g, const GreedyPartition& p) {
  std::int64_t n = g.vertex_count();
  std::int64_t r = p.size();
  return triangle_count(g) >= r * (g.edge_count() - r * (n - r));
}

}  // namespace tripack
