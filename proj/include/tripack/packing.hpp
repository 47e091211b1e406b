#pragma once

#include <cstdint>
#include <vector>

#include "tripack/bounds.hpp"
#include "tripack/errors.hpp"
#include "tripack/graph.hpp"
#include "tripack/partition.hpp"

namespace tripack {

struct TrianglePacking {
  Graph host;
  std::vector<Triangle> triangles;  // pairwise edge-disjoint

  std::int64_t size() const { return static_cast<std::int64_t>(triangles.size()); }
};

inline bool is_edge_disjoint(const std::vector<Triangle>& ts) {
  std::vector<std::pair<int, int>> used;
  used.reserve(ts.size() * 3);
  for (const auto& t : ts) {
    used.emplace_back(t.v[0], t.v[1]);
    used.emplace_back(t.v[0], t.v[2]);
    used.emplace_back(t.v[1], t.v[2]);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

// Buckets the triangles of g by the residue of h(T) = h(a)+h(b)+h(c) mod r,
// where h(v) is the index of the clique of P containing v.  In a K4-free
// graph two triangles sharing an edge land in different buckets, so every
// bucket is an edge-disjoint family.
inline std::vector<std::vector<Triangle>> residue_classes(
    const Graph& g, const GreedyPartition& p) {
  if (!validate_greedy(g, p))
    throw PreconditionError("residue_classes: partition is not greedy");
  int r = p.size();
  std::vector<std::vector<Triangle>> classes(static_cast<std::size_t>(r));
  if (r == 0) return classes;
  std::vector<int> h(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int i = 0; i < r; ++i)
    for (int v : p.cliques[static_cast<std::size_t>(i)])
      h[static_cast<std::size_t>(v)] = i;
  for (const auto& t : triangles(g)) {
    int residue = static_cast<int>(
        (static_cast<std::int64_t>(h[static_cast<std::size_t>(t.v[0])]) +
         h[static_cast<std::size_t>(t.v[1])] +
         h[static_cast<std::size_t>(t.v[2])]) %
        r);
    classes[static_cast<std::size_t>(residue)].push_back(t);
  }
  return classes;
}

// Largest residue class (smallest residue wins ties).  Guaranteed to be an
// edge-disjoint packing of at least ceil(t / r) triangles; both facts are
// re-checked before returning.
inline TrianglePacking extract_packing(const Graph& g,
                                       const GreedyPartition& p) {
  if (!clique_number_at_most(g, 3))
    throw PreconditionError("extract_packing: graph has a K4");
  auto classes = residue_classes(g, p);
  TrianglePacking out;
  out.host = g;
  std::size_t best = 0;
  for (std::size_t i = 1; i < classes.size(); ++i)
    if (classes[i].size() > classes[best].size()) best = i;
  if (!classes.empty()) out.triangles = classes[best];
  if (!is_edge_disjoint(out.triangles))
    throw InternalError("extract_packing: residue class is not edge-disjoint");
  std::int64_t t = triangle_count(g);
  if (p.size() > 0 && out.size() < ceil_div(t, p.size()))
    throw InternalError("extract_packing: class smaller than ceil(t/r)");
  if (p.size() == 0 && t != 0)
    throw InternalError("extract_packing: triangles without any cliques");
  return out;
}

}  // namespace tripack
