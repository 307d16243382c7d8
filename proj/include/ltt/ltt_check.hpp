#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ltt/dfa.hpp"
#include "ltt/graph.hpp"

namespace ltt {

struct CheckOptions {
  int workers = 1;
  std::size_t memory_budget_bytes = kDefaultGraphBudgetBytes;
};

/// Wall-clock phase breakdown of one checker run. Phase times always sum to
/// at most total_ms (total is measured around the whole run).
struct PhaseTimes {
  std::vector<std::pair<std::string, double>> phases;
  double total_ms = 0;

  void add(std::string name, double ms) { phases.emplace_back(std::move(name), ms); }
};

/// Everything the pair-collapse check needs: the state graph, its
/// reachability closure, and the component structure of the pair graph
/// (held implicitly; pair successors derive from g1).
struct PairTables {
  LabeledDigraph g1;
  ReachTable reach1;
  SccDecomposition scc2;
};

PairTables build_pair_tables(const Dfa& d, const CheckOptions& opts = {});

/// No pair node (p,q), p != q, lying on a cycle of the pair graph may have
/// p and q mutually reachable. Witness: states = {p, q}, words = {cycle word
/// fixing (p,q), word p->q, word q->p}.
Verdict check_pair_collapse(const PairTables& t);

/// Entry per quadruple (p,q,r,r1): kNotApplicable when the preconditions
/// (p >= r >= r1, p >= q, (p,r1) and (q,r) on pair-graph cycles) fail,
/// kEmpty when the witness set T = { t | (p,r1) >= (q,t) in the pair graph
/// and (q,r,t) on a triple-graph cycle } is empty, otherwise the state-graph
/// component shared by every member of T.
struct TsccTable {
  static constexpr std::int32_t kNotApplicable = -2;
  static constexpr std::int32_t kEmpty = -1;

  int n = 0;
  std::vector<std::int32_t> entries;  // n^4

  std::int32_t at(int p, int q, int r, int r1) const {
    return entries[((static_cast<std::size_t>(p) * n + q) * n + r) * n + r1];
  }
};

struct LttTables {
  PairTables pair;
  SccDecomposition scc1;
  ReachTable reach2;
  SccDecomposition scc3;
};

LttTables build_ltt_tables(const Dfa& d, PairTables pair, const CheckOptions& opts = {});

/// Result of building the quadruple table. When two members of some witness
/// set T fall in different components the table is abandoned and the verdict
/// carries states = {p, q, r, r1, t, t2}, components = {comp(t), comp(t2)}.
struct TsccResult {
  bool consistent = true;
  TsccTable table;
  Verdict verdict = Verdict::pass();
};

TsccResult compute_tscc_table(const Dfa& d, const LttTables& t,
                              std::size_t budget_bytes = kDefaultGraphBudgetBytes);

/// For every (p,q,r,q1,r1) with two non-empty table entries, (p,q1,r1) on a
/// triple-graph cycle and (q,r) >= (q1,r1) in the pair graph, the entries
/// must name the same component. Witness: states = {p,q,r,q1,r1},
/// components = {entry(p,q,r,r1), entry(p,r,q,q1)}.
Verdict check_condition2(const TsccTable& table, const LttTables& t, int workers = 1);

Verdict is_locally_threshold_testable(const Dfa& d, const CheckOptions& opts = {});

struct LttRun {
  Verdict verdict;
  PhaseTimes times;
};

LttRun run_ltt_check(const Dfa& d, const CheckOptions& opts = {});

}  // namespace ltt
