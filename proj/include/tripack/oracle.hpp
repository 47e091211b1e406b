#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "tripack/errors.hpp"
#include "tripack/graph.hpp"
#include "tripack/partition.hpp"

namespace tripack {
namespace oracle {

inline constexpr int kTriangleBudget = 60;
inline constexpr int kEnumerationBudget = 8;

namespace detail {

struct PackingSearch {
  const std::vector<Triangle>* tris;
  std::vector<std::array<int, 3>> edge_ids;
  std::vector<char> used;
  int best = 0;

  void dfs(std::size_t idx, int count) {
    int remaining = static_cast<int>(tris->size() - idx);
    if (count + remaining <= best) return;
    if (idx == tris->size()) {
      best = std::max(best, count);
      return;
    }
    const auto& ids = edge_ids[idx];
    if (!used[ids[0]] && !used[ids[1]] && !used[ids[2]]) {
      used[ids[0]] = used[ids[1]] = used[ids[2]] = 1;
      dfs(idx + 1, count + 1);
      used[ids[0]] = used[ids[1]] = used[ids[2]] = 0;
    }
    dfs(idx + 1, count);
  }
};

}  // namespace detail

// Exact maximum number of pairwise edge-disjoint triangles, by exhaustive
// take-or-skip search over the triangle list.  Deliberately independent of
// the residue-class machinery so it can act as a referee for it.
inline std::int64_t max_packing_exact(const Graph& g) {
  auto tris = triangles(g);
  if (static_cast<int>(tris.size()) > kTriangleBudget)
    throw SizeError("max_packing_exact: more than 60 triangles");
  detail::PackingSearch search;
  search.tris = &tris;
  int n = g.vertex_count();
  search.used.assign(static_cast<std::size_t>(n) * n, 0);
  search.edge_ids.reserve(tris.size());
  for (const auto& t : tris)
    search.edge_ids.push_back({t.v[0] * n + t.v[1], t.v[0] * n + t.v[2],
                               t.v[1] * n + t.v[2]});
  search.dfs(0, 0);
  return search.best;
}

// Independent recount of edges and triangles from the edge list via an
// explicit adjacency matrix; used to referee the bit-twiddling counters.
struct Recount {
  std::int64_t edges = 0;
  std::int64_t triangles = 0;
};

inline Recount recount(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  Recount out;
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
    ++out.edges;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!adj[static_cast<std::size_t>(a) * n + b]) continue;
      for (int c = b + 1; c < n; ++c)
        if (adj[static_cast<std::size_t>(a) * n + c] &&
            adj[static_cast<std::size_t>(b) * n + c])
          ++out.triangles;
    }
  return out;
}

namespace detail {

inline std::vector<std::uint64_t> maximum_cliques(const Graph& g,
                                                  std::uint64_t mask,
                                                  int size) {
  std::vector<std::uint64_t> out;
  // Enumerate submasks of `mask`; n <= 8 keeps this tiny.
  std::uint64_t sub = mask;
  while (true) {
    if (std::popcount(sub) == size && tripack::detail::is_clique(g, sub))
      out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline const std::vector<std::vector<std::vector<int>>>& partitions_of(
    const Graph& g, std::uint64_t mask,
    std::map<std::uint64_t, std::vector<std::vector<std::vector<int>>>>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<std::vector<int>>> result;
  if (mask == 0) {
    result.push_back({});
  } else {
    int s = tripack::detail::max_clique_size(g, mask);
    for (std::uint64_t c : maximum_cliques(g, mask, s)) {
      for (const auto& rest : partitions_of(g, mask & ~c, memo)) {
        auto p = rest;
        p.push_back(bits::to_vector(c));
        result.push_back(std::move(p));
      }
    }
    for (auto& p : result)
      std::sort(p.begin(), p.end(),
                [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
                });
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
  }
  return memo.emplace(mask, std::move(result)).first->second;
}

}  // namespace detail

// Every greedy partition of g, i.e. every backward maximum-clique removal
// order, deduplicated as sequences of vertex sets (equal-size runs sorted
// lexicographically).
inline std::vector<GreedyPartition> enumerate_greedy_partitions(
    const Graph& g) {
  if (g.vertex_count() > kEnumerationBudget)
    throw SizeError("enumerate_greedy_partitions: more than 8 vertices");
  std::map<std::uint64_t, std::vector<std::vector<std::vector<int>>>> memo;
  const auto& raw = detail::partitions_of(g, g.vertex_mask(), memo);
  std::vector<GreedyPartition> out;
  out.reserve(raw.size());
  for (const auto& cliques : raw) out.push_back(GreedyPartition{cliques});
  return out;
}

}  // namespace oracle
}  // namespace tripack
