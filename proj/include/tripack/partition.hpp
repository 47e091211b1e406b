#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tripack/errors.hpp"
#include "tripack/graph.hpp"

namespace tripack {

// Partition of V(G) into cliques C_0..C_{r-1}, ordered by non-decreasing
// size.  Greedy means: for every i, C_0 u ... u C_i has no clique on
// |C_i|+1 vertices.  Equivalently the partition can be produced backwards
// by repeatedly removing a maximum clique.
struct GreedyPartition {
  std::vector<std::vector<int>> cliques;

  int size() const { return static_cast<int>(cliques.size()); }
};

// Generalized greedy partition: C_0 is a blow-up of a clique (independent
// parts with identical neighborhoods in the whole graph, pairwise fully
// joined), followed by tail cliques C_1..C_l with
// #parts(C_0) <= |C_1| <= ... <= |C_l| and the same prefix condition.
struct Ggp {
  std::vector<std::vector<int>> head_parts;
  std::vector<std::vector<int>> tail_cliques;
};

// Size of a ggp: biggest head part plus the number of tail cliques.
// Consistent with the plain notion: expanding C_0 into its own greedy
// partition (one clique per layer of the blow-up) yields the same size.
inline int ggp_size(const Ggp& p) {
  int biggest = 0;
  for (const auto& part : p.head_parts)
    biggest = std::max(biggest, static_cast<int>(part.size()));
  return biggest + static_cast<int>(p.tail_cliques.size());
}

namespace detail {

// Throws StructureError unless the given blocks partition 0..n-1.
inline void check_cover(const std::vector<const std::vector<int>*>& blocks,
                        int n, const char* what) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto* block : blocks) {
    if (block->empty()) throw StructureError(std::string(what) + ": empty block");
    for (int v : *block) {
      if (v < 0 || v >= n)
        throw StructureError(std::string(what) + ": vertex id out of range");
      if (seen[static_cast<std::size_t>(v)])
        throw StructureError(std::string(what) + ": vertex appears twice");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw StructureError(std::string(what) + ": vertex missing from cover");
}

}  // namespace detail

// Structural problems (not a partition of V at all) throw StructureError;
// an honest partition that fails the greedy conditions returns false.
inline bool validate_greedy(const Graph& g, const GreedyPartition& p) {
  std::vector<const std::vector<int>*> blocks;
  blocks.reserve(p.cliques.size());
  for (const auto& c : p.cliques) blocks.push_back(&c);
  detail::check_cover(blocks, g.vertex_count(), "greedy partition");

  std::uint64_t prefix = 0;
  std::size_t prev = 0;
  for (const auto& c : p.cliques) {
    if (c.size() < prev) return false;  // sizes must be non-decreasing
    prev = c.size();
    std::uint64_t mask = bits::from_vector(c);
    if (!detail::is_clique(g, mask)) return false;
    prefix |= mask;
    if (detail::exists_clique(g, prefix, static_cast<int>(c.size()) + 1))
      return false;
  }
  return true;
}

// Deterministic build: repeatedly remove the lexicographically smallest
// maximum clique of what remains; the removal sequence reversed is the
// partition.  Cliques of equal size are listed in lexicographic order.
inline GreedyPartition build_greedy_partition(const Graph& g) {
  std::vector<std::vector<int>> removed;
  std::uint64_t mask = g.vertex_mask();
  while (mask) {
    int s = detail::max_clique_size(g, mask);
    std::uint64_t c = detail::lex_smallest_clique(g, mask, s);
    removed.push_back(bits::to_vector(c));
    mask &= ~c;
  }
  GreedyPartition p;
  p.cliques.assign(removed.rbegin(), removed.rend());
  std::sort(p.cliques.begin(), p.cliques.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return p;
}

inline bool validate_ggp(const Graph& g, const Ggp& p) {
  std::vector<const std::vector<int>*> blocks;
  for (const auto& part : p.head_parts) blocks.push_back(&part);
  for (const auto& c : p.tail_cliques) blocks.push_back(&c);
  detail::check_cover(blocks, g.vertex_count(), "ggp");

  // Head parts: independent, internally symmetric, pairwise fully joined.
  std::vector<std::uint64_t> part_masks;
  for (const auto& part : p.head_parts) {
    std::uint64_t mask = bits::from_vector(part);
    std::uint64_t row = g.neighbors(part[0]);
    if (row & mask) return false;  // edge inside a part
    for (int v : part)
      if (g.neighbors(v) != row) return false;  // parts must be symmetric
    part_masks.push_back(mask);
  }
  for (std::size_t i = 0; i < part_masks.size(); ++i)
    for (std::size_t j = i + 1; j < part_masks.size(); ++j) {
      int rep = p.head_parts[i][0];
      if ((g.neighbors(rep) & part_masks[j]) != part_masks[j]) return false;
    }

  std::uint64_t head_mask = 0;
  for (std::uint64_t m : part_masks) head_mask |= m;

  std::size_t prev = p.head_parts.size();  // #parts(C_0) <= |C_1|
  std::uint64_t prefix = head_mask;
  for (const auto& c : p.tail_cliques) {
    if (c.size() < prev) return false;
    prev = c.size();
    std::uint64_t mask = bits::from_vector(c);
    if (!detail::is_clique(g, mask)) return false;
    prefix |= mask;
    if (detail::exists_clique(g, prefix, static_cast<int>(c.size()) + 1))
      return false;
  }
  return true;
}

// A plain greedy partition viewed as a ggp: the first clique becomes the
// head with all parts of size one.
inline Ggp ggp_from_greedy(const GreedyPartition& p) {
  Ggp out;
  if (p.cliques.empty()) return out;
  for (int v : p.cliques.front()) out.head_parts.push_back({v});
  out.tail_cliques.assign(p.cliques.begin() + 1, p.cliques.end());
  return out;
}

struct HeadContraction {
  Graph graph;                           // head parts collapsed to one vertex
  GreedyPartition partition;             // contracted head first, then tail
  std::vector<std::vector<int>> groups;  // new id -> original vertices
};

// Collapses every head part to a single vertex.  Because parts are
// symmetric this is well defined; the result is an ordinary greedy
// partition whose first clique is the contracted head.
inline HeadContraction contract_head(const Graph& g, const Ggp& p) {
  if (!validate_ggp(g, p))
    throw PreconditionError("contract_head: argument is not a valid ggp");
  HeadContraction out;
  int next = 0;
  std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (const auto& part : p.head_parts) {
    out.groups.push_back(part);
    for (int v : part) new_id[static_cast<std::size_t>(v)] = next;
    ++next;
  }
  std::uint64_t head_mask = 0;
  for (const auto& part : p.head_parts)
    head_mask |= bits::from_vector(part);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!(head_mask & bits::one(v))) {
      out.groups.push_back({v});
      new_id[static_cast<std::size_t>(v)] = next++;
    }

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int a = new_id[static_cast<std::size_t>(u)];
    int b = new_id[static_cast<std::size_t>(v)];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph(next, edges);

  std::vector<int> head;
  for (std::size_t i = 0; i < p.head_parts.size(); ++i)
    head.push_back(static_cast<int>(i));
  if (!head.empty()) out.partition.cliques.push_back(head);
  for (const auto& c : p.tail_cliques) {
    std::vector<int> mapped;
    for (int v : c) mapped.push_back(new_id[static_cast<std::size_t>(v)]);
    std::sort(mapped.begin(), mapped.end());
    out.partition.cliques.push_back(mapped);
  }
  if (!validate_greedy(out.graph, out.partition))
    throw InternalError("contract_head: contraction is not greedy");
  return out;
}

}  // namespace tripack
