#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tripack/bounds.hpp"
#include "tripack/errors.hpp"
#include "tripack/generators.hpp"
#include "tripack/graph.hpp"
#include "tripack/io.hpp"
#include "tripack/oracle.hpp"
#include "tripack/packing.hpp"
#include "tripack/partition.hpp"
#include "tripack/symmetrize.hpp"

namespace tripack {

enum class CheckId {
  kTheorem2,
  kTheorem4,
  kResidue,
  kMatching,
  kSymmAlg,
  kOracleCross,
  kClaim9,
  kClaim10,
  kConjecture8,
};

inline constexpr std::array<CheckId, 9> kAllChecks = {
    CheckId::kTheorem2,  CheckId::kTheorem4, CheckId::kResidue,
    CheckId::kMatching,  CheckId::kSymmAlg,  CheckId::kOracleCross,
    CheckId::kClaim9,    CheckId::kClaim10,  CheckId::kConjecture8,
};

inline const char* check_id_name(CheckId id) {
  switch (id) {
    case CheckId::kTheorem2: return "theorem2";
    case CheckId::kTheorem4: return "theorem4";
    case CheckId::kResidue: return "residue";
    case CheckId::kMatching: return "matching";
    case CheckId::kSymmAlg: return "symmalg";
    case CheckId::kOracleCross: return "oracle_cross";
    case CheckId::kClaim9: return "claim9";
    case CheckId::kClaim10: return "claim10";
    case CheckId::kConjecture8: return "conjecture8";
  }
  return "?";
}

inline std::optional<CheckId> parse_check_id(const std::string& name) {
  for (CheckId id : kAllChecks)
    if (name == check_id_name(id)) return id;
  return std::nullopt;
}

// A proven statement failing is a bug in this codebase; the conjecture
// probe is the one check whose failures are findings, not defects.
inline bool check_is_blocking(CheckId id) {
  return id != CheckId::kConjecture8;
}

struct CheckCounter {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::int64_t equalities = 0;
  std::vector<std::string> witnesses;          // graph6 of failures
  std::vector<std::string> equality_examples;  // graph6 of tight cases
};

struct SweepOptions {
  bool all_partitions = false;     // claims on every greedy partition (n <= 6)
  std::int64_t oracle_sample = 1;  // run the oracle on every N-th instance
  int jobs = 1;
  bool tsv = false;
  std::int64_t witness_cap = 10;
  std::int64_t equality_cap = 5;
};

struct Report {
  std::string mode;
  int n = 0;
  std::int64_t total_graphs = 0;
  std::int64_t k4_free = 0;
  std::int64_t triangle_free = 0;
  std::uint64_t seed = 0;       // random mode only
  std::int64_t count = 0;       // random mode only
  double edge_prob = 0.0;       // random mode only
  std::vector<std::pair<CheckId, CheckCounter>> checks;  // enum order
  std::vector<std::string> tsv_rows;

  CheckCounter* find(CheckId id) {
    for (auto& [cid, c] : checks)
      if (cid == id) return &c;
    return nullptr;
  }
  const CheckCounter* find(CheckId id) const {
    for (const auto& [cid, c] : checks)
      if (cid == id) return &c;
    return nullptr;
  }

  bool blocking_failures() const {
    for (const auto& [cid, c] : checks)
      if (check_is_blocking(cid) && c.failures > 0) return true;
    return false;
  }
  bool any_failures() const {
    for (const auto& [cid, c] : checks)
      if (c.failures > 0) return true;
    return false;
  }
};

namespace detail {

inline constexpr const char* kTsvHeader =
    "graph6\tn\te\tt\tr\tk4\tf4\tg4\tpacking\toracle";

struct CheckSet {
  std::array<bool, kAllChecks.size()> on{};

  bool has(CheckId id) const { return on[static_cast<std::size_t>(id)]; }
  void set(CheckId id) { on[static_cast<std::size_t>(id)] = true; }
};

inline CheckSet make_check_set(const std::vector<CheckId>& ids) {
  CheckSet s;
  if (ids.empty())
    for (CheckId id : kAllChecks) s.set(id);
  for (CheckId id : ids) s.set(id);
  return s;
}

inline void note_failure(CheckCounter& c, const std::string& g6,
                         const SweepOptions& opt) {
  ++c.failures;
  if (static_cast<std::int64_t>(c.witnesses.size()) < opt.witness_cap)
    c.witnesses.push_back(g6);
}

inline void note_equality(CheckCounter& c, const std::string& g6,
                          const SweepOptions& opt) {
  ++c.equalities;
  if (static_cast<std::int64_t>(c.equality_examples.size()) < opt.equality_cap)
    c.equality_examples.push_back(g6);
}

// Shared per-graph worker for both sweep modes.  `oracle_due` gates the
// sampled cross-check; failures never throw, they are tallied.
inline void run_checks_on_graph(const Graph& g, const CheckSet& want,
                                const SweepOptions& opt, bool oracle_due,
                                Report& rep) {
  std::string g6 = encode_graph6(g);
  std::int64_t n = g.vertex_count();
  ++rep.total_graphs;

  bool k4free = clique_number_at_most(g, 3);
  if (k4free) ++rep.k4_free;
  std::int64_t t = triangle_count(g);
  if (t == 0) ++rep.triangle_free;

  GreedyPartition p = build_greedy_partition(g);
  std::int64_t r = p.size();
  std::int64_t ceil_k = k_value(g).ceil();

  std::int64_t packing_size = -1;
  if (k4free &&
      (want.has(CheckId::kTheorem2) || want.has(CheckId::kOracleCross) ||
       opt.tsv)) {
    TrianglePacking packing = extract_packing(g, p);
    packing_size = static_cast<std::int64_t>(packing.triangles.size());
  }

  if (want.has(CheckId::kTheorem2) && k4free) {
    CheckCounter& c = *rep.find(CheckId::kTheorem2);
    ++c.checked;
    if (packing_size < ceil_k)
      note_failure(c, g6, opt);
    else if (ceil_k >= 1 && packing_size == ceil_k)
      note_equality(c, g6, opt);
  }

  if (want.has(CheckId::kTheorem4)) {
    CheckCounter& c = *rep.find(CheckId::kTheorem4);
    ++c.checked;
    std::int64_t f4 = f_value(g, r).q;
    if (f4 > 0)
      note_failure(c, g6, opt);
    else if (f4 == 0)
      note_equality(c, g6, opt);
  }

  if (want.has(CheckId::kResidue) && k4free) {
    CheckCounter& c = *rep.find(CheckId::kResidue);
    ++c.checked;
    std::vector<std::vector<Triangle>> classes = residue_classes(g, p);
    std::int64_t largest = 0;
    bool ok = true;
    for (const auto& cls : classes) {
      if (!is_edge_disjoint(cls)) ok = false;
      largest = std::max(largest, static_cast<std::int64_t>(cls.size()));
    }
    if (r > 0 && largest < ceil_div(t, r)) ok = false;
    if (!ok) note_failure(c, g6, opt);
  }

  if (want.has(CheckId::kMatching) && k4free) {
    CheckCounter& c = *rep.find(CheckId::kMatching);
    ++c.checked;
    bool ok = true;
    for (std::size_t i = 0; i < p.cliques.size() && ok; ++i)
      for (std::size_t j = i + 1; j < p.cliques.size() && ok; ++j) {
        try {
          nonedge_matching(g, p.cliques[i], p.cliques[j]);
        } catch (const std::exception&) {
          ok = false;
        }
      }
    if (!ok) note_failure(c, g6, opt);
  }

  if (want.has(CheckId::kSymmAlg)) {
    CheckCounter& c = *rep.find(CheckId::kSymmAlg);
    ++c.checked;
    bool ok = true;
    try {
      SymmetrizationTrace trace = run_symm_alg(g, p);
      ok = static_cast<bool>(verify_trace(trace, g, p));
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) note_failure(c, g6, opt);
  }

  std::int64_t oracle_size = -1;
  if (want.has(CheckId::kOracleCross) && k4free && oracle_due) {
    CheckCounter& c = *rep.find(CheckId::kOracleCross);
    bool ok = true;
    try {
      oracle_size = oracle::max_packing_exact(g);
    } catch (const SizeError&) {
      oracle_size = -1;  // over budget: skip silently, not a failure
    }
    if (oracle_size >= 0) {
      ++c.checked;
      if (oracle_size < packing_size || oracle_size < ceil_k) ok = false;
      if (!ok) note_failure(c, g6, opt);
    }
  }

  if (want.has(CheckId::kClaim9) && k4free) {
    CheckCounter& c = *rep.find(CheckId::kClaim9);
    ++c.checked;
    bool ok = claim_r2_check(g, p);
    if (ok && opt.all_partitions) {
      for (const auto& q : oracle::enumerate_greedy_partitions(g))
        if (!claim_r2_check(g, q)) {
          ok = false;
          break;
        }
    }
    if (!ok) note_failure(c, g6, opt);
  }

  if (want.has(CheckId::kClaim10) && t == 0) {
    CheckCounter& c = *rep.find(CheckId::kClaim10);
    ++c.checked;
    bool ok = trianglefree_check(g, p);
    if (ok && opt.all_partitions) {
      for (const auto& q : oracle::enumerate_greedy_partitions(g))
        if (!trianglefree_check(g, q)) {
          ok = false;
          break;
        }
    }
    if (!ok) note_failure(c, g6, opt);
  }

  if (want.has(CheckId::kConjecture8) && k4free) {
    CheckCounter& c = *rep.find(CheckId::kConjecture8);
    ++c.checked;
    if (!conjecture_nice_check(g, p))
      note_failure(c, g6, opt);
    else if (t == r * (g.edge_count() - r * (n - r)))
      note_equality(c, g6, opt);
  }

  if (opt.tsv) {
    std::string row = g6;
    auto add = [&row](std::int64_t v) { row += '\t'; row += std::to_string(v); };
    add(n);
    add(g.edge_count());
    add(t);
    add(r);
    add(k_value(g).q);
    add(f_value(g, r).q);
    add(g_value(g, r).q);
    row += '\t';
    row += packing_size >= 0 ? std::to_string(packing_size) : "-";
    row += '\t';
    row += oracle_size >= 0 ? std::to_string(oracle_size) : "-";
    rep.tsv_rows.push_back(std::move(row));
  }
}

inline Report blank_report(const CheckSet& want) {
  Report rep;
  for (CheckId id : kAllChecks)
    if (want.has(id)) rep.checks.emplace_back(id, CheckCounter{});
  return rep;
}

// Fragments are produced over contiguous index ranges and merged in range
// order, so witness lists and counters never depend on the job count.
inline void merge_into(Report& dst, Report&& src, const SweepOptions& opt) {
  dst.total_graphs += src.total_graphs;
  dst.k4_free += src.k4_free;
  dst.triangle_free += src.triangle_free;
  for (std::size_t i = 0; i < dst.checks.size(); ++i) {
    CheckCounter& a = dst.checks[i].second;
    CheckCounter& b = src.checks[i].second;
    a.checked += b.checked;
    a.failures += b.failures;
    a.equalities += b.equalities;
    for (auto& w : b.witnesses)
      if (static_cast<std::int64_t>(a.witnesses.size()) < opt.witness_cap)
        a.witnesses.push_back(std::move(w));
    for (auto& w : b.equality_examples)
      if (static_cast<std::int64_t>(a.equality_examples.size()) <
          opt.equality_cap)
        a.equality_examples.push_back(std::move(w));
  }
  for (auto& row : src.tsv_rows) dst.tsv_rows.push_back(std::move(row));
}

inline Graph graph_from_edge_mask(
    int n, std::uint64_t mask,
    const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  while (mask) {
    int b = std::countr_zero(mask);
    mask &= mask - 1;
    auto [u, v] = pairs[static_cast<std::size_t>(b)];
    rows[static_cast<std::size_t>(u)] |= bits::one(v);
    rows[static_cast<std::size_t>(v)] |= bits::one(u);
  }
  return Graph::from_adjacency(n, rows);
}

template <typename PerIndex>
inline Report sweep_indices(std::int64_t total, const CheckSet& want,
                            const SweepOptions& opt, PerIndex&& per_index) {
  int jobs = std::max(1, opt.jobs);
  if (static_cast<std::int64_t>(jobs) > total && total > 0)
    jobs = static_cast<int>(total);
  if (jobs == 1 || total == 0) {
    Report rep = blank_report(want);
    for (std::int64_t i = 0; i < total; ++i) per_index(i, rep);
    return rep;
  }
  std::vector<Report> frags(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  std::int64_t chunk = (total + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    std::int64_t lo = j * chunk;
    std::int64_t hi = std::min(total, lo + chunk);
    frags[static_cast<std::size_t>(j)] = blank_report(want);
    workers.emplace_back([&, lo, hi, j] {
      Report& frag = frags[static_cast<std::size_t>(j)];
      for (std::int64_t i = lo; i < hi; ++i) per_index(i, frag);
    });
  }
  for (auto& w : workers) w.join();
  Report rep = blank_report(want);
  for (auto& frag : frags) merge_into(rep, std::move(frag), opt);
  return rep;
}

}  // namespace detail

// Every labeled graph on n vertices, enumerated as edge subsets in
// lexicographic pair order.  n is capped where 2^C(n,2) stays a desk job.
inline Report exhaustive_sweep(int n, const std::vector<CheckId>& check_ids,
                               const SweepOptions& opt = {}) {
  if (n < 0) throw PreconditionError("exhaustive_sweep: n must be >= 0");
  if (n > 7)
    throw SizeError("exhaustive_sweep: n > 7 needs more than 2^21 graphs");
  detail::CheckSet want = detail::make_check_set(check_ids);

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::int64_t total = std::int64_t{1} << pairs.size();
  std::int64_t sample = std::max<std::int64_t>(1, opt.oracle_sample);

  Report rep = detail::sweep_indices(
      total, want, opt, [&](std::int64_t i, Report& frag) {
        Graph g = detail::graph_from_edge_mask(
            n, static_cast<std::uint64_t>(i), pairs);
        detail::run_checks_on_graph(g, want, opt, i % sample == 0, frag);
      });
  rep.mode = "exhaustive";
  rep.n = n;
  if (opt.tsv) rep.tsv_rows.insert(rep.tsv_rows.begin(), detail::kTsvHeader);
  return rep;
}

// Seeded random K4-free instances; instance i is fully determined by
// (seed, i), so reports are reproducible under any job count.
inline Report random_sweep(int n, std::int64_t count, double edge_prob,
                           std::uint64_t seed,
                           const std::vector<CheckId>& check_ids,
                           const SweepOptions& opt = {}) {
  if (n < 0 || count < 0)
    throw PreconditionError("random_sweep: n and count must be >= 0");
  if (n > 40) throw SizeError("random_sweep: n > 40");
  detail::CheckSet want = detail::make_check_set(check_ids);
  std::int64_t sample = std::max<std::int64_t>(1, opt.oracle_sample);

  Report rep = detail::sweep_indices(
      count, want, opt, [&](std::int64_t i, Report& frag) {
        Graph g = gen::random_k4_free(
                      n, edge_prob,
                      gen::detail::mix_seed(seed, static_cast<std::uint64_t>(i)))
                      .graph;
        detail::run_checks_on_graph(g, want, opt, i % sample == 0, frag);
      });
  rep.mode = "random";
  rep.n = n;
  rep.seed = seed;
  rep.count = count;
  rep.edge_prob = edge_prob;
  if (opt.tsv) rep.tsv_rows.insert(rep.tsv_rows.begin(), detail::kTsvHeader);
  return rep;
}

}  // namespace tripack
