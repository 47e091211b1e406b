#pragma once

#include <json.hpp>

#include "tripack/bounds.hpp"
#include "tripack/explorer.hpp"
#include "tripack/graph.hpp"
#include "tripack/io.hpp"
#include "tripack/packing.hpp"
#include "tripack/partition.hpp"
#include "tripack/symmetrize.hpp"

namespace tripack {

using ordered_json = nlohmann::ordered_json;

inline ordered_json graph_to_json(const Graph& g) {
  return {{"n", g.vertex_count()},
          {"e", g.edge_count()},
          {"graph6", encode_graph6(g)}};
}

inline ordered_json partition_to_json(const GreedyPartition& p) {
  return {{"cliques", p.cliques}, {"r", p.size()}};
}

inline ordered_json packing_to_json(const TrianglePacking& pk) {
  ordered_json triangles = ordered_json::array();
  for (const Triangle& t : pk.triangles)
    triangles.push_back({t.v[0], t.v[1], t.v[2]});
  QuarterInt k = k_value(pk.host);
  return {{"graph", graph_to_json(pk.host)},
          {"size", pk.triangles.size()},
          {"k_scaled4", k.q},
          {"ceil_k", k.ceil()},
          {"triangles", triangles}};
}

// Rounds are reconstructed from the flat step list: the steps between two
// subround-end markers form one round.
inline ordered_json trace_to_json(const SymmetrizationTrace& trace) {
  ordered_json out;
  out["input"] = encode_graph6(trace.input);
  out["n"] = trace.input.vertex_count();

  const TraceStep& head = trace.steps.front();
  out["initial"] = {{"e", head.e},
                    {"t", head.t},
                    {"r", head.r_current},
                    {"f4", head.f_scaled4},
                    {"blocks", head.ggp_cliques}};

  ordered_json rounds = ordered_json::array();
  ordered_json matches = ordered_json::array();
  ordered_json merges = ordered_json::array();
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    switch (s.kind) {
      case TraceStepKind::kMatchPair:
        matches.push_back({{"part", s.a},
                           {"vertex", s.b},
                           {"head_won", s.first_won},
                           {"e", s.e},
                           {"t", s.t},
                           {"f4", s.f_scaled4},
                           {"g6", encode_graph6(s.after)}});
        break;
      case TraceStepKind::kMergePair:
        merges.push_back({{"first", s.a},
                          {"second", s.b},
                          {"first_won", s.first_won},
                          {"e", s.e},
                          {"t", s.t},
                          {"f4", s.f_scaled4},
                          {"g6", encode_graph6(s.after)}});
        break;
      case TraceStepKind::kSubroundEnd:
        rounds.push_back({{"matches", std::move(matches)},
                          {"merges", std::move(merges)},
                          {"e", s.e},
                          {"t", s.t},
                          {"r", s.r_current},
                          {"f4", s.f_scaled4},
                          {"blocks", s.ggp_cliques},
                          {"g6", encode_graph6(s.after)}});
        matches = ordered_json::array();
        merges = ordered_json::array();
        break;
    }
  }
  out["rounds"] = std::move(rounds);
  out["outcome"] = outcome_name(trace.outcome);
  out["final"] = encode_graph6(trace.final_graph);
  out["conclusion"] = {
      {"f4_start", trace.steps.front().f_scaled4},
      {"f4_final", trace.steps.back().f_scaled4},
      {"nonpositive", trace.steps.back().f_scaled4 <= 0}};
  return out;
}

inline ordered_json report_to_json(const Report& rep) {
  ordered_json out;
  out["mode"] = rep.mode;
  out["n"] = rep.n;
  out["total_graphs"] = rep.total_graphs;
  out["k4_free"] = rep.k4_free;
  out["triangle_free"] = rep.triangle_free;
  if (rep.mode == "random") {
    out["seed"] = rep.seed;
    out["count"] = rep.count;
    out["edge_prob"] = rep.edge_prob;
  }
  ordered_json checks;
  for (const auto& [id, c] : rep.checks)
    checks[check_id_name(id)] = {{"checked", c.checked},
                                 {"failures", c.failures},
                                 {"equalities", c.equalities},
                                 {"witnesses", c.witnesses},
                                 {"equality_examples", c.equality_examples}};
  out["checks"] = std::move(checks);
  out["blocking_failures"] = rep.blocking_failures();
  return out;
}

}  // namespace tripack
