#include "ltt/graph.hpp"

#include <algorithm>
#include <thread>

namespace ltt {

LabeledDigraph transition_graph(const Dfa& d) {
  LabeledDigraph g;
  g.nodes = d.n;
  g.letters = d.letters();
  g.succ.assign(d.delta.begin(), d.delta.end());
  return g;
}

LabeledDigraph product_graph(const Dfa& d, int k, std::size_t budget_bytes) {
  const std::size_t n = static_cast<std::size_t>(d.n);
  const int m = d.letters();
  std::size_t nodes = 1;
  for (int i = 0; i < k; ++i) nodes *= n;
  const std::size_t required = nodes * m * sizeof(std::int32_t);
  if (required > budget_bytes)
    throw CapacityError("product graph exceeds memory budget", required, budget_bytes);

  LabeledDigraph g;
  g.nodes = static_cast<int>(nodes);
  g.letters = m;
  g.succ.resize(nodes * m);
  if (k == 2) {
    for (int p = 0; p < d.n; ++p)
      for (int q = 0; q < d.n; ++q) {
        const std::size_t v = static_cast<std::size_t>(p) * n + q;
        for (int a = 0; a < m; ++a)
          g.succ[v * m + a] = d.next(p, a) * static_cast<int>(n) + d.next(q, a);
      }
  } else if (k == 3) {
    for (int p = 0; p < d.n; ++p)
      for (int q = 0; q < d.n; ++q)
        for (int r = 0; r < d.n; ++r) {
          const std::size_t v = (static_cast<std::size_t>(p) * n + q) * n + r;
          for (int a = 0; a < m; ++a)
            g.succ[v * m + a] = static_cast<std::int32_t>(
                (static_cast<std::size_t>(d.next(p, a)) * n + d.next(q, a)) * n +
                d.next(r, a));
        }
  } else {
    throw std::invalid_argument("product_graph: k must be 2 or 3");
  }
  return g;
}

namespace {

// Pearce's one-array variant of Tarjan, iterative: rindex holds discovery
// indices (counting up from 1) for active nodes and component numbers
// (counting down from n-1) for finished ones; the two ranges never meet.
// Product graphs get large enough that recursion would overflow the stack.
template <typename SuccFn>
SccDecomposition scc_core(int n, int m, SuccFn&& next) {
  SccDecomposition out;
  out.component.assign(n, 0);
  out.on_cycle.assign(n, 0);

  std::vector<std::int32_t> rindex(n, 0);
  std::vector<char> root_flag(n, 0);
  std::vector<std::int32_t> scc_stack;
  struct Frame {
    std::int32_t v;
    std::int32_t letter;
  };
  std::vector<Frame> frames;
  std::int32_t index = 1;
  std::int32_t c = n - 1;

  for (int start = 0; start < n; ++start) {
    if (rindex[start] != 0) continue;
    rindex[start] = index++;
    root_flag[start] = 1;
    frames.push_back({start, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const std::int32_t v = f.v;
      if (f.letter < m) {
        const std::int32_t w = next(v, f.letter++);
        if (rindex[w] == 0) {
          rindex[w] = index++;
          root_flag[w] = 1;
          frames.push_back({w, 0});
        } else if (rindex[w] < rindex[v]) {
          rindex[v] = rindex[w];
          root_flag[v] = 0;
        }
      } else {
        frames.pop_back();
        if (root_flag[v]) {
          --index;
          while (!scc_stack.empty() && rindex[v] <= rindex[scc_stack.back()]) {
            rindex[scc_stack.back()] = c;
            scc_stack.pop_back();
            --index;
          }
          rindex[v] = c--;
        } else {
          scc_stack.push_back(v);
        }
        if (!frames.empty()) {
          const std::int32_t u = frames.back().v;
          if (rindex[v] < rindex[u]) {
            rindex[u] = rindex[v];
            root_flag[u] = 0;
          }
        }
      }
    }
  }
  const std::int32_t comps = (n - 1) - c;
  for (int v = 0; v < n; ++v) out.component[v] = (n - 1) - rindex[v];
  out.component_count = comps;

  std::vector<std::int32_t> size(comps, 0);
  for (int v = 0; v < n; ++v) ++size[out.component[v]];
  for (int v = 0; v < n; ++v) {
    if (size[out.component[v]] > 1) {
      out.on_cycle[v] = 1;
      continue;
    }
    for (int a = 0; a < m; ++a)
      if (next(v, a) == v) {
        out.on_cycle[v] = 1;
        break;
      }
  }
  return out;
}

}  // namespace

SccDecomposition scc_decompose(const LabeledDigraph& g) {
  return scc_core(g.nodes, g.letters, [&g](int v, int a) { return g.next(v, a); });
}

SccDecomposition scc_product(const Dfa& d, int k, std::size_t budget_bytes) {
  const std::size_t n = static_cast<std::size_t>(d.n);
  const int m = d.letters();
  std::size_t nodes = 1;
  for (int i = 0; i < k; ++i) nodes *= n;
  // the decomposition itself needs about 14 bytes per node
  const std::size_t required = nodes * 14;
  if (required > budget_bytes)
    throw CapacityError("product scc exceeds memory budget", required, budget_bytes);

  if (k == 1) {
    return scc_core(d.n, m,
                    [&d](int v, int a) { return static_cast<std::int32_t>(d.next(v, a)); });
  }
  // per-letter successor tables scaled by the row stride keep the product
  // successor a few L1 loads
  std::vector<std::int32_t> d1(d.delta.begin(), d.delta.end());
  std::vector<std::int32_t> dn(d1.size());
  for (std::size_t i = 0; i < d1.size(); ++i)
    dn[i] = d1[i] * static_cast<std::int32_t>(n);
  if (k == 2) {
    const int nn = d.n;
    return scc_core(static_cast<int>(nodes), m, [&, nn](int v, int a) {
      const int p = v / nn, q = v % nn;
      return dn[static_cast<std::size_t>(p) * m + a] +
             d1[static_cast<std::size_t>(q) * m + a];
    });
  }
  if (k != 3) throw std::invalid_argument("scc_product: k must be 1, 2 or 3");
  std::vector<std::int32_t> dnn(d1.size());
  for (std::size_t i = 0; i < d1.size(); ++i)
    dnn[i] = dn[i] * static_cast<std::int32_t>(n);
  const int nn = d.n;
  return scc_core(static_cast<int>(nodes), m, [&, nn](int v, int a) {
    const int r = v % nn;
    const int pq = v / nn;
    const int q = pq % nn, p = pq / nn;
    return dnn[static_cast<std::size_t>(p) * m + a] +
           dn[static_cast<std::size_t>(q) * m + a] +
           d1[static_cast<std::size_t>(r) * m + a];
  });
}

namespace {

void reach_rows(const LabeledDigraph& g, ReachTable& t, int begin, int end,
                std::vector<std::int32_t>& frontier) {
  for (int u = begin; u < end; ++u) {
    frontier.clear();
    t.set(u, u);
    frontier.push_back(u);
    while (!frontier.empty()) {
      const std::int32_t v = frontier.back();
      frontier.pop_back();
      for (int a = 0; a < g.letters; ++a) {
        const std::int32_t w = g.next(v, a);
        if (!t.reach(u, w)) {
          t.set(u, w);
          frontier.push_back(w);
        }
      }
    }
  }
}

}  // namespace

ReachTable reachability_closure(const LabeledDigraph& g, int workers,
                                std::size_t budget_bytes) {
  ReachTable t;
  t.nodes = g.nodes;
  t.row_words = (g.nodes + 63) / 64;
  const std::size_t required =
      static_cast<std::size_t>(g.nodes) * t.row_words * sizeof(std::uint64_t);
  if (required > budget_bytes)
    throw CapacityError("reachability table exceeds memory budget", required,
                        budget_bytes);
  t.bits.assign(static_cast<std::size_t>(g.nodes) * t.row_words, 0);

  workers = std::max(1, std::min(workers, g.nodes));
  if (workers == 1) {
    std::vector<std::int32_t> frontier;
    reach_rows(g, t, 0, g.nodes, frontier);
    return t;
  }
  std::vector<std::thread> pool;
  const int chunk = (g.nodes + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(g.nodes, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&g, &t, begin, end] {
      std::vector<std::int32_t> frontier;
      reach_rows(g, t, begin, end, frontier);
    });
  }
  for (auto& th : pool) th.join();
  return t;
}

std::optional<Word> shortest_word(const LabeledDigraph& g, int from, int to) {
  if (from == to) return Word{};
  std::vector<std::int32_t> parent(g.nodes, -1), parent_letter(g.nodes, -1);
  std::vector<std::int32_t> queue;
  queue.reserve(64);
  queue.push_back(from);
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t v = queue[head];
    for (int a = 0; a < g.letters; ++a) {
      const std::int32_t w = g.next(v, a);
      if (parent[w] != -1) continue;
      parent[w] = v;
      parent_letter[w] = a;
      if (w == to) {
        Word word;
        for (std::int32_t x = to; x != from; x = parent[x])
          word.push_back(parent_letter[x]);
        std::reverse(word.begin(), word.end());
        return word;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::optional<Word> shortest_cycle_word(const LabeledDigraph& g, int node) {
  // BFS from node; the first closing edge u -a-> node seen in BFS order
  // closes a shortest cycle
  std::vector<std::int32_t> parent(g.nodes, -1), parent_letter(g.nodes, -1);
  std::vector<std::int32_t> queue;
  queue.push_back(node);
  parent[node] = node;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t u = queue[head];
    for (int a = 0; a < g.letters; ++a) {
      const std::int32_t w = g.next(u, a);
      if (w == node) {
        Word word;
        for (std::int32_t x = u; x != node; x = parent[x])
          word.push_back(parent_letter[x]);
        std::reverse(word.begin(), word.end());
        word.push_back(a);
        return word;
      }
      if (parent[w] == -1) {
        parent[w] = u;
        parent_letter[w] = a;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace ltt
