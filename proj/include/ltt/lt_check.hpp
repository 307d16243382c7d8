#pragma once

#include <cstdint>
#include <vector>

#include "ltt/dfa.hpp"
#include "ltt/graph.hpp"
#include "ltt/ltt_check.hpp"
#include "ltt/semigroup.hpp"

namespace ltt {

/// The pair graph prepared for the fast local-testability traversal:
///   kept   - edge (p,q) -a-> (r,s) survives iff s >= q or s >= p
///   marked - node (p,q) has a letter with exactly one of p.a >= q, q.a >= q
///   start  - super-source targets: pair-cycle nodes (p,q) with p >= q
struct PrunedPairGraph {
  int n = 0;
  int letters = 0;
  std::vector<char> kept;    // n^2 x letters
  std::vector<char> marked;  // n^2
  std::vector<char> start;   // n^2

  bool edge_kept(int v, int a) const {
    return kept[static_cast<std::size_t>(v) * letters + a];
  }
};

PrunedPairGraph build_pruned_pair_graph(const Dfa& d, const PairTables& t);

/// The quadratic check: pair collapse, then a traversal of the pruned pair
/// graph from the super-source; locally testable iff no marked node is
/// reached. Witness: states = {p, q, r, s} (start node, marked node),
/// letters = {a}, words = {path word from (p,q) to (r,s)}.
Verdict is_locally_testable_fast(const Dfa& d, const CheckOptions& opts = {});

struct LtRun {
  Verdict verdict;
  PhaseTimes times;
};

LtRun run_lt_fast(const Dfa& d, const CheckOptions& opts = {});

/// Literal quartic scan: for every pair-cycle node (p,q) with p >= q, every
/// (r,s) reachable from it in the pair graph with s ~ q, every letter a:
/// r.a >= s must hold exactly when s.a >= s. Witness: states = {p,q,r,s},
/// letters = {a}.
Verdict is_locally_testable_direct(const Dfa& d, const CheckOptions& opts = {});

/// Element-quantified form: for every pair-cycle node (p,q) with p >= q and
/// every semigroup element s: p.s >= q iff q.s >= q. Witness: states =
/// {p, q}, words = {witness word of s}.
Verdict is_locally_testable_semigroup(const Dfa& d, const TransitionSemigroup& s,
                                      const CheckOptions& opts = {});

}  // namespace ltt
