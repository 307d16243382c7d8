#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltt/dfa.hpp"

namespace ltt {

inline constexpr std::size_t kDefaultGraphBudgetBytes = std::size_t(1) << 30;

/// Deterministic complete labeled digraph: every node has exactly one
/// successor per letter. Covers the transition graph of a DFA and its
/// direct powers (all coordinates advance by the same letter).
struct LabeledDigraph {
  int nodes = 0;
  int letters = 0;
  std::vector<std::int32_t> succ;  // nodes x letters, row-major

  std::int32_t next(int v, int a) const {
    return succ[static_cast<std::size_t>(v) * letters + a];
  }
};

/// The DFA's own transition graph (the k=1 case).
LabeledDigraph transition_graph(const Dfa& d);

/// Direct product of k copies of the transition graph, k in {2, 3}.
/// Node (p1,..,pk) is encoded row-major: ((p1*n)+p2)*n+... Throws
/// CapacityError when nodes*letters*4 bytes exceeds the budget.
LabeledDigraph product_graph(const Dfa& d, int k,
                             std::size_t budget_bytes = kDefaultGraphBudgetBytes);

/// Strongly connected components plus the per-node cycle flag: on_cycle[v]
/// is true iff v lies on some nonempty-letter-word cycle, i.e. its component
/// has more than one node or v has a self-loop.
struct SccDecomposition {
  int component_count = 0;
  std::vector<std::int32_t> component;
  std::vector<char> on_cycle;
};

SccDecomposition scc_decompose(const LabeledDigraph& g);

/// Same decomposition for the k-fold product of the transition graph,
/// k in {1, 2, 3}, computed straight off the transition table without
/// materializing the product. Node encoding matches product_graph.
SccDecomposition scc_product(const Dfa& d, int k,
                             std::size_t budget_bytes = kDefaultGraphBudgetBytes);

/// Packed reflexive reachability matrix. Rows are padded to whole 64-bit
/// words so parallel per-source construction never shares a word.
struct ReachTable {
  int nodes = 0;
  int row_words = 0;
  std::vector<std::uint64_t> bits;

  bool reach(int u, int v) const {
    return (bits[static_cast<std::size_t>(u) * row_words + (v >> 6)] >>
            (v & 63)) & 1u;
  }
  void set(int u, int v) {
    bits[static_cast<std::size_t>(u) * row_words + (v >> 6)] |=
        std::uint64_t(1) << (v & 63);
  }
};

/// One traversal per source node; reach(u,u) always true. The result is
/// deterministic for any worker count.
ReachTable reachability_closure(const LabeledDigraph& g, int workers = 1,
                                std::size_t budget_bytes = kDefaultGraphBudgetBytes);

/// Shortest letter word leading from one node to another (empty when equal),
/// or nullopt when unreachable.
std::optional<Word> shortest_word(const LabeledDigraph& g, int from, int to);

/// Shortest nonempty word w with node.w == node, or nullopt when the node
/// lies on no cycle.
std::optional<Word> shortest_cycle_word(const LabeledDigraph& g, int node);

}  // namespace ltt
