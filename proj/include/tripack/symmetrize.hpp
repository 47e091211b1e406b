#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tripack/bounds.hpp"
#include "tripack/errors.hpp"
#include "tripack/graph.hpp"
#include "tripack/oracle.hpp"
#include "tripack/partition.hpp"

namespace tripack {

// Matching of non-adjacent pairs between two cliques A and B, covering A.
struct NonEdgeMatching {
  std::vector<std::pair<int, int>> pairs;  // (vertex of A, vertex of B)
};

// A, B disjoint cliques with |A| <= |B| whose union induces no K_{|B|+1}.
// Under these conditions a covering matching always exists: a failing Hall
// set would splice with its non-neighbors in B into a forbidden clique.
// Deterministic: free B-vertices first, then augmenting paths, both
// scanned in ascending id order.
inline NonEdgeMatching nonedge_matching(const Graph& g,
                                        const std::vector<int>& a_side,
                                        const std::vector<int>& b_side) {
  int n = g.vertex_count();
  for (int v : a_side)
    if (v < 0 || v >= n)
      throw PreconditionError("nonedge_matching: A vertex out of range");
  for (int v : b_side)
    if (v < 0 || v >= n)
      throw PreconditionError("nonedge_matching: B vertex out of range");
  std::uint64_t am = bits::from_vector(a_side);
  std::uint64_t bm = bits::from_vector(b_side);
  if (std::popcount(am) != static_cast<int>(a_side.size()) ||
      std::popcount(bm) != static_cast<int>(b_side.size()))
    throw PreconditionError("nonedge_matching: repeated vertex in a side");
  if (am & bm) throw PreconditionError("nonedge_matching: sides overlap");
  if (!detail::is_clique(g, am) || !detail::is_clique(g, bm))
    throw PreconditionError("nonedge_matching: sides must be cliques");
  if (a_side.size() > b_side.size())
    throw PreconditionError("nonedge_matching: |A| must be <= |B|");
  if (detail::exists_clique(g, am | bm,
                            static_cast<int>(b_side.size()) + 1))
    throw PreconditionError(
        "nonedge_matching: union contains a clique larger than B");

  std::size_t bs = b_side.size();
  std::vector<int> match_of_b(bs, -1);  // index into a_side
  std::vector<char> visited(bs, 0);

  auto augment = [&](auto&& self, int ai) -> bool {
    int a = a_side[static_cast<std::size_t>(ai)];
    for (std::size_t bi = 0; bi < bs; ++bi) {
      if (visited[bi] || g.adjacent(a, b_side[bi])) continue;
      if (match_of_b[bi] == -1) {
        match_of_b[bi] = ai;
        return true;
      }
    }
    for (std::size_t bi = 0; bi < bs; ++bi) {
      if (visited[bi] || g.adjacent(a, b_side[bi])) continue;
      visited[bi] = 1;
      if (self(self, match_of_b[bi])) {
        match_of_b[bi] = ai;
        return true;
      }
    }
    return false;
  };

  for (std::size_t ai = 0; ai < a_side.size(); ++ai) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, static_cast<int>(ai)))
      throw InternalError(
          "nonedge_matching: no covering matching despite preconditions");
  }

  NonEdgeMatching out;
  out.pairs.resize(a_side.size());
  for (std::size_t bi = 0; bi < bs; ++bi)
    if (match_of_b[bi] != -1)
      out.pairs[static_cast<std::size_t>(match_of_b[bi])] = {
          a_side[static_cast<std::size_t>(match_of_b[bi])], b_side[bi]};
  return out;
}

enum class TraceStepKind { kMatchPair, kMergePair, kSubroundEnd };

inline const char* trace_step_kind_name(TraceStepKind k) {
  switch (k) {
    case TraceStepKind::kMatchPair: return "match-pair";
    case TraceStepKind::kMergePair: return "merge-pair";
    case TraceStepKind::kSubroundEnd: return "subround-end";
  }
  return "?";
}

// One audited event.  Match steps record (head part index, tail vertex),
// merge steps record the two part indices.  f_scaled4 is
// r_current*(4e - n^2) - 4t; within a round r_current is the round's
// fixed r0, at a subround end it becomes the new partition's size unless
// the run stops on negative k, where keeping r0 keeps the chain honest.
struct TraceStep {
  TraceStepKind kind = TraceStepKind::kSubroundEnd;
  int a = -1;
  int b = -1;
  // match: head representative's f won (ties included); merge: the
  // lower-indexed part's representative won (ties go the other way).
  bool first_won = false;
  std::int64_t e = 0;
  std::int64_t t = 0;
  std::int64_t r_current = 0;
  std::int64_t f_scaled4 = 0;
  std::int64_t ggp_cliques = 0;  // blocks of the governing ggp
  Graph after;
};

enum class Outcome { kStoppedSinglePart, kStoppedNegativeK };

inline const char* outcome_name(Outcome o) {
  return o == Outcome::kStoppedSinglePart ? "stopped_single_part"
                                          : "stopped_negative_k";
}

// steps[0] is a subround-end snapshot of the input; every later step is a
// mutation or a round boundary.  f_scaled4 never decreases along steps.
struct SymmetrizationTrace {
  Graph input;
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::kStoppedSinglePart;
  Graph final_graph;
};

// Blow-up of a graph on C0 u C1 left behind by the match phase: parts are
// independent, members neighborhood-identical, but parts are not yet
// pairwise joined.
struct BlowUp {
  std::vector<std::vector<int>> parts;
  std::vector<std::vector<int>> remaining_tail;  // tail cliques past C1
};

struct SubMatchResult {
  Graph graph;
  BlowUp blowup;
};

struct SubMergeResult {
  Graph graph;
  Ggp ggp;
};

namespace detail {

inline std::int64_t scaled_objective(const Graph& g, std::int64_t r0) {
  std::int64_t n = g.vertex_count();
  return r0 * (4 * g.edge_count() - n * n) - 4 * triangle_count(g);
}

// All members of a part must share one neighborhood row and be mutually
// non-adjacent; anything else means the blow-up bookkeeping broke.
inline void check_part_symmetric(const Graph& g, const std::vector<int>& part,
                                 const char* where) {
  std::uint64_t mask = bits::from_vector(part);
  std::uint64_t row = g.neighbors(part.at(0));
  if (row & mask) throw InternalError(std::string(where) + ": part has an edge");
  for (int v : part)
    if (g.neighbors(v) != row)
      throw InternalError(std::string(where) + ": part lost symmetry");
}

// target <- copy of source; a replacement may never lower the scaled
// objective, checked numerically on the spot.
inline Graph replace_checked(const Graph& g, int target, int source,
                             std::int64_t r0, const char* where) {
  if (g.adjacent(target, source))
    throw InternalError(std::string(where) +
                        ": replacement endpoints are adjacent");
  std::int64_t before = scaled_objective(g, r0);
  Graph out = replace_by_copy(g, target, source);
  if (scaled_objective(out, r0) < before)
    throw InternalError(std::string(where) + ": objective decreased");
  return out;
}

inline std::int64_t ggp_block_count(const Ggp& p) {
  return (p.head_parts.empty() ? 0 : 1) +
         static_cast<std::int64_t>(p.tail_cliques.size());
}

}  // namespace detail

// Match phase of one round: contract the head, find the covering non-edge
// matching from head parts into C1, then equalize each matched pair toward
// the side with the larger r0*d - t.  Head side wins ties.
inline SubMatchResult symm_sub_match(const Graph& g, const Ggp& p,
                                     std::int64_t r0,
                                     std::vector<TraceStep>* steps = nullptr) {
  if (!validate_ggp(g, p))
    throw PreconditionError("symm_sub_match: invalid ggp");
  if (p.tail_cliques.empty())
    throw PreconditionError("symm_sub_match: ggp has no tail clique");
  if (r0 != ggp_size(p))
    throw PreconditionError("symm_sub_match: r0 is not the ggp size");

  HeadContraction hc = contract_head(g, p);
  const std::vector<int>& a_ids = hc.partition.cliques.at(0);
  const std::vector<int>& b_ids = hc.partition.cliques.at(1);
  NonEdgeMatching matching = nonedge_matching(hc.graph, a_ids, b_ids);

  std::int64_t round_blocks = detail::ggp_block_count(p);
  const std::vector<int>& c1 = p.tail_cliques.front();
  std::uint64_t matched_c1 = 0;

  Graph cur = g;
  std::vector<std::vector<int>> parts;
  for (const auto& pr : matching.pairs) {
    int part_idx = pr.first;  // head part i was contracted to vertex i
    int w = hc.groups.at(static_cast<std::size_t>(pr.second)).at(0);
    matched_c1 |= bits::one(w);
    std::vector<int> part = p.head_parts.at(static_cast<std::size_t>(part_idx));
    detail::check_part_symmetric(cur, part, "symm_sub_match");
    int rep = part.front();
    std::int64_t fv = vertex_stats(cur, rep, r0).objective;
    std::int64_t fw = vertex_stats(cur, w, r0).objective;
    bool head_wins = fv >= fw;
    if (head_wins) {
      cur = detail::replace_checked(cur, w, rep, r0, "symm_sub_match");
    } else {
      for (int u : part)
        cur = detail::replace_checked(cur, u, w, r0, "symm_sub_match");
    }
    part.push_back(w);
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
    if (steps) {
      TraceStep s;
      s.kind = TraceStepKind::kMatchPair;
      s.a = part_idx;
      s.b = w;
      s.first_won = head_wins;
      s.e = cur.edge_count();
      s.t = triangle_count(cur);
      s.r_current = r0;
      s.f_scaled4 = detail::scaled_objective(cur, r0);
      s.ggp_cliques = round_blocks;
      s.after = cur;
      steps->push_back(std::move(s));
    }
  }
  for (int v : c1)
    if (!(matched_c1 & bits::one(v))) parts.push_back({v});

  SubMatchResult out;
  out.graph = std::move(cur);
  out.blowup.parts = std::move(parts);
  out.blowup.remaining_tail.assign(p.tail_cliques.begin() + 1,
                                   p.tail_cliques.end());
  return out;
}

// Merge phase: while two parts are not joined, equalize them toward the
// representative with larger r0*d - t and fuse them (the fused part keeps
// the lower index).  Ends as a blow-up of a complete graph, which heads
// the returned ggp.
inline SubMergeResult symm_sub_merge(const Graph& g, const BlowUp& blowup,
                                     std::int64_t r0,
                                     std::vector<TraceStep>* steps = nullptr) {
  Graph cur = g;
  std::vector<std::vector<int>> parts = blowup.parts;
  for (const auto& part : parts) {
    if (part.empty()) throw PreconditionError("symm_sub_merge: empty part");
    detail::check_part_symmetric(cur, part, "symm_sub_merge");
  }
  std::int64_t round_blocks =
      (parts.empty() ? 0 : 1) +
      static_cast<std::int64_t>(blowup.remaining_tail.size()) + 1;

  for (;;) {
    std::size_t mi = parts.size(), mj = parts.size();
    for (std::size_t i = 0; i < parts.size() && mi == parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (!cur.adjacent(parts[i].front(), parts[j].front())) {
          mi = i;
          mj = j;
          break;
        }
    if (mi == parts.size()) break;

    detail::check_part_symmetric(cur, parts[mi], "symm_sub_merge");
    detail::check_part_symmetric(cur, parts[mj], "symm_sub_merge");
    int rep1 = parts[mi].front();
    int rep2 = parts[mj].front();
    std::int64_t f1 = vertex_stats(cur, rep1, r0).objective;
    std::int64_t f2 = vertex_stats(cur, rep2, r0).objective;
    bool first_wins = f1 > f2;  // on a tie the second part's vertex stays
    const std::vector<int>& losers = first_wins ? parts[mj] : parts[mi];
    int winner_rep = first_wins ? rep1 : rep2;
    for (int u : losers)
      cur = detail::replace_checked(cur, u, winner_rep, r0, "symm_sub_merge");

    std::vector<int> merged = parts[mi];
    merged.insert(merged.end(), parts[mj].begin(), parts[mj].end());
    std::sort(merged.begin(), merged.end());
    parts[mi] = std::move(merged);
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(mj));

    if (steps) {
      TraceStep s;
      s.kind = TraceStepKind::kMergePair;
      s.a = static_cast<int>(mi);
      s.b = static_cast<int>(mj);
      s.first_won = first_wins;
      s.e = cur.edge_count();
      s.t = triangle_count(cur);
      s.r_current = r0;
      s.f_scaled4 = detail::scaled_objective(cur, r0);
      s.ggp_cliques = round_blocks;
      s.after = cur;
      steps->push_back(std::move(s));
    }
  }

  SubMergeResult out;
  out.ggp.head_parts = std::move(parts);
  out.ggp.tail_cliques = blowup.remaining_tail;
  if (!validate_ggp(cur, out.ggp))
    throw InternalError("symm_sub_merge: merged structure is not a ggp");
  if (ggp_size(out.ggp) < r0)
    throw InternalError("symm_sub_merge: partition size dropped below r0");
  out.graph = std::move(cur);
  return out;
}

// Full driver.  Alternates match and merge rounds until the partition is a
// single blown-up clique or the edge count falls below n^2/4, recording
// every mutation.  The recorded f chain starts at f(G0, P0) and never
// decreases, so a non-positive final value certifies f(G0, P0) <= 0.
inline SymmetrizationTrace run_symm_alg(const Graph& g0,
                                        const GreedyPartition& p0) {
  if (!validate_greedy(g0, p0))
    throw PreconditionError("run_symm_alg: partition is not greedy");

  SymmetrizationTrace trace;
  trace.input = g0;
  Ggp ggp = ggp_from_greedy(p0);
  Graph cur = g0;
  std::int64_t r = ggp_size(ggp);
  std::int64_t blocks = detail::ggp_block_count(ggp);
  std::int64_t n = g0.vertex_count();

  TraceStep init;
  init.kind = TraceStepKind::kSubroundEnd;
  init.e = cur.edge_count();
  init.t = triangle_count(cur);
  init.r_current = r;
  init.f_scaled4 = detail::scaled_objective(cur, r);
  init.ggp_cliques = blocks;
  init.after = cur;
  trace.steps.push_back(std::move(init));

  int input_omega_bound = 0;  // lazy; only needed on single-part stop

  // k can already be negative before any round has run; stopping here
  // matches the in-loop rule and keeps r fixed at the initial size.
  if (4 * cur.edge_count() - n * n < 0) {
    trace.outcome = Outcome::kStoppedNegativeK;
    trace.final_graph = cur;
    return trace;
  }

  std::int64_t guard = blocks + 2;
  for (;;) {
    if (--guard < 0)
      throw InternalError("run_symm_alg: rounds exceeded the block count");
    if (ggp.tail_cliques.empty()) {
      trace.outcome = Outcome::kStoppedSinglePart;
      trace.final_graph = cur;
      auto sizes = complete_multipartite_parts(cur);
      if (!sizes)
        throw InternalError("run_symm_alg: final graph not multipartite");
      input_omega_bound = static_cast<int>(sizes->size());
      if (!detail::exists_clique(g0, g0.vertex_mask(), input_omega_bound))
        throw InternalError("run_symm_alg: clique number grew");
      return trace;
    }

    SubMatchResult matched = symm_sub_match(cur, ggp, r, &trace.steps);
    SubMergeResult merged =
        symm_sub_merge(matched.graph, matched.blowup, r, &trace.steps);
    cur = merged.graph;

    std::int64_t new_blocks = detail::ggp_block_count(merged.ggp);
    if (new_blocks >= blocks)
      throw InternalError("run_symm_alg: block count failed to decrease");
    blocks = new_blocks;
    ggp = std::move(merged.ggp);

    bool negative_k = 4 * cur.edge_count() - n * n < 0;
    std::int64_t r_end = negative_k ? r : ggp_size(ggp);

    TraceStep s;
    s.kind = TraceStepKind::kSubroundEnd;
    s.e = cur.edge_count();
    s.t = triangle_count(cur);
    s.r_current = r_end;
    s.f_scaled4 = detail::scaled_objective(cur, r_end);
    s.ggp_cliques = blocks;
    s.after = cur;
    trace.steps.push_back(std::move(s));

    if (negative_k) {
      trace.outcome = Outcome::kStoppedNegativeK;
      trace.final_graph = cur;
      return trace;
    }
    r = ggp_size(ggp);
  }
}

struct VerifyResult {
  bool ok = true;
  std::string reason;
  std::size_t step_index = 0;  // offending step when !ok

  explicit operator bool() const { return ok; }
};

namespace detail {

inline VerifyResult verify_fail(std::size_t idx, std::string reason) {
  return {false, std::move(reason), idx};
}

}  // namespace detail

// Replays a trace with fresh arithmetic: per-step edge and triangle
// recounts, the monotone f chain, non-decreasing r, strictly decreasing
// block counts, phase order inside rounds, and the outcome's structural
// claim on the final graph.  Passing means the trace is a checked
// certificate of f(G0, P0) <= 0.
inline VerifyResult verify_trace(const SymmetrizationTrace& trace,
                                 const Graph& g0, const GreedyPartition& p0) {
  using detail::verify_fail;
  if (!validate_greedy(g0, p0))
    return verify_fail(0, "input partition is not greedy");
  if (trace.steps.empty()) return verify_fail(0, "trace has no steps");
  if (!(trace.input == g0)) return verify_fail(0, "stored input differs");

  std::int64_t n = g0.vertex_count();
  const TraceStep& head = trace.steps.front();
  if (head.kind != TraceStepKind::kSubroundEnd)
    return verify_fail(0, "first step is not a subround end");
  if (!(head.after == g0)) return verify_fail(0, "first snapshot is not G0");
  if (head.r_current != p0.size())
    return verify_fail(0, "initial r differs from the partition size");

  std::int64_t prev_f = 0, prev_r = 0, prev_blocks = 0;
  bool merging = false;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    if (s.after.vertex_count() != n)
      return verify_fail(i, "vertex count changed");
    auto rc = oracle::recount(s.after);
    if (rc.edges != s.e) return verify_fail(i, "edge count mismatch");
    if (rc.triangles != s.t) return verify_fail(i, "triangle count mismatch");
    if (s.r_current < 0) return verify_fail(i, "negative r");
    if (s.f_scaled4 != s.r_current * (4 * s.e - n * n) - 4 * s.t)
      return verify_fail(i, "stored f does not match its definition");
    if (i > 0) {
      if (s.f_scaled4 < prev_f) return verify_fail(i, "f decreased");
      if (s.r_current < prev_r) return verify_fail(i, "r decreased");
      switch (s.kind) {
        case TraceStepKind::kMatchPair:
          if (merging) return verify_fail(i, "match step after a merge");
          [[fallthrough]];
        case TraceStepKind::kMergePair:
          if (s.kind == TraceStepKind::kMergePair) merging = true;
          if (s.r_current != prev_r)
            return verify_fail(i, "r changed in the middle of a round");
          break;
        case TraceStepKind::kSubroundEnd:
          merging = false;
          if (s.ggp_cliques >= prev_blocks)
            return verify_fail(i, "block count did not decrease");
          break;
      }
    }
    prev_f = s.f_scaled4;
    prev_r = s.r_current;
    if (s.kind == TraceStepKind::kSubroundEnd) prev_blocks = s.ggp_cliques;
  }

  const TraceStep& last = trace.steps.back();
  std::size_t last_idx = trace.steps.size() - 1;
  if (last.kind != TraceStepKind::kSubroundEnd)
    return verify_fail(last_idx, "trace does not end on a subround end");
  if (!(trace.final_graph == last.after))
    return verify_fail(last_idx, "final graph differs from last snapshot");

  if (trace.outcome == Outcome::kStoppedNegativeK) {
    if (4 * last.e - n * n >= 0)
      return verify_fail(last_idx, "negative-k stop with 4e - n^2 >= 0");
  } else {
    auto sizes = complete_multipartite_parts(trace.final_graph);
    if (!sizes)
      return verify_fail(last_idx, "final graph is not complete multipartite");
    std::int64_t biggest = sizes->empty() ? 0 : sizes->back();
    if (last.r_current != biggest)
      return verify_fail(last_idx, "final r is not the biggest part");
    std::vector<std::int64_t> wide(sizes->begin(), sizes->end());
    std::int64_t g4 = 4 * multipartite_g(wide);
    if (last.f_scaled4 > g4 || g4 > 0)
      return verify_fail(last_idx, "final f is not boxed by multipartite g");
    if (!detail::exists_clique(g0, g0.vertex_mask(),
                               static_cast<int>(sizes->size())))
      return verify_fail(last_idx, "clique number grew along the run");
  }

  if (trace.steps.front().f_scaled4 != f_value(g0, p0.size()).q)
    return verify_fail(0, "chain does not start at f(G0, P0)");
  if (last.f_scaled4 > 0)
    return verify_fail(last_idx, "chain ends positive");
  return {};
}

}  // namespace tripack
