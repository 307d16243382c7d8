#include "ltt/lt_check.hpp"

#include <algorithm>
#include <chrono>

namespace ltt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

PrunedPairGraph build_pruned_pair_graph(const Dfa& d, const PairTables& t) {
  const int n = d.n;
  const int m = d.letters();
  PrunedPairGraph g;
  g.n = n;
  g.letters = m;
  g.kept.assign(static_cast<std::size_t>(n) * n * m, 0);
  g.marked.assign(static_cast<std::size_t>(n) * n, 0);
  g.start.assign(static_cast<std::size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const std::size_t v = static_cast<std::size_t>(p) * n + q;
      for (int a = 0; a < m; ++a) {
        const int s = d.next(q, a);
        if (t.reach1.reach(s, q) || t.reach1.reach(s, p)) g.kept[v * m + a] = 1;
        if (t.reach1.reach(d.next(p, a), q) != t.reach1.reach(s, q))
          g.marked[v] = 1;
      }
      if (t.scc2.on_cycle[v] && t.reach1.reach(p, q)) g.start[v] = 1;
    }
  }
  return g;
}

Verdict is_locally_testable_fast(const Dfa& d, const CheckOptions& opts) {
  return run_lt_fast(d, opts).verdict;
}

LtRun run_lt_fast(const Dfa& d, const CheckOptions& opts) {
  LtRun run;
  const auto t0 = Clock::now();

  auto t = Clock::now();
  PairTables tables = build_pair_tables(d, opts);
  run.times.add("pair_tables", ms_since(t));

  t = Clock::now();
  Verdict v = check_pair_collapse(tables);
  run.times.add("pair_collapse", ms_since(t));
  if (!v.ok) {
    run.verdict = std::move(v);
    run.times.total_ms = ms_since(t0);
    return run;
  }

  t = Clock::now();
  PrunedPairGraph g = build_pruned_pair_graph(d, tables);
  const int n = d.n;
  const int m = d.letters();
  const int total = n * n;

  // BFS from the super-source over kept edges; parents let us rebuild the
  // path for the witness, roots remember which start node a path began at.
  std::vector<std::int32_t> parent(total, -1), parent_letter(total, -1),
      root(total, -1), queue;
  queue.reserve(total);
  for (int v = 0; v < total; ++v)
    if (g.start[v]) {
      parent[v] = v;
      root[v] = v;
      queue.push_back(v);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t v = queue[head];
    const int vp = v / n, vq = v % n;
    for (int a = 0; a < m; ++a) {
      if (!g.edge_kept(v, a)) continue;
      const std::int32_t w = d.next(vp, a) * n + d.next(vq, a);
      if (parent[w] != -1) continue;
      parent[w] = v;
      parent_letter[w] = a;
      root[w] = root[v];
      queue.push_back(w);
    }
  }

  int bad = -1;
  for (int v = 0; v < total; ++v)
    if (g.marked[v] && parent[v] != -1) {
      bad = v;
      break;
    }
  run.times.add("traversal", ms_since(t));

  if (bad == -1) {
    run.verdict = Verdict::pass();
    run.times.total_ms = ms_since(t0);
    return run;
  }

  Word path;
  for (int v = bad; parent[v] != v; v = parent[v]) path.push_back(parent_letter[v]);
  std::reverse(path.begin(), path.end());
  int letter = -1;
  const int r = bad / n, s = bad % n;
  for (int a = 0; a < m; ++a)
    if (tables.reach1.reach(d.next(r, a), s) != tables.reach1.reach(d.next(s, a), s)) {
      letter = a;
      break;
    }
  Witness w;
  w.states = {root[bad] / n, root[bad] % n, r, s};
  w.letters = {letter};
  w.words.push_back(std::move(path));
  w.note = "marked pair node reachable from the super-source";
  run.verdict = Verdict::fail(Violation::lt_reachable_marked_node, std::move(w));
  run.times.total_ms = ms_since(t0);
  return run;
}

Verdict is_locally_testable_direct(const Dfa& d, const CheckOptions& opts) {
  PairTables tables = build_pair_tables(d, opts);
  if (Verdict v = check_pair_collapse(tables); !v.ok) return v;
  const int n = d.n;
  const int m = d.letters();
  const LabeledDigraph g2 = product_graph(d, 2, opts.memory_budget_bytes);
  const ReachTable reach2 =
      reachability_closure(g2, opts.workers, opts.memory_budget_bytes);
  const ReachTable& reach1 = tables.reach1;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const int v = p * n + q;
      if (!tables.scc2.on_cycle[v] || !reach1.reach(p, q)) continue;
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          if (!reach2.reach(v, r * n + s)) continue;
          if (!(reach1.reach(s, q) && reach1.reach(q, s))) continue;
          for (int a = 0; a < m; ++a) {
            if (reach1.reach(d.next(r, a), s) != reach1.reach(d.next(s, a), s)) {
              Witness w;
              w.states = {p, q, r, s};
              w.letters = {a};
              w.note = "letter condition fails";
              return Verdict::fail(Violation::lt_letter_condition, std::move(w));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_locally_testable_semigroup(const Dfa& d, const TransitionSemigroup& sg,
                                      const CheckOptions& opts) {
  PairTables tables = build_pair_tables(d, opts);
  if (Verdict v = check_pair_collapse(tables); !v.ok) return v;
  const int n = d.n;
  const ReachTable& reach1 = tables.reach1;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;  // both conditions coincide on the diagonal
      if (!tables.scc2.on_cycle[p * n + q] || !reach1.reach(p, q)) continue;
      for (int i = 0; i < sg.size(); ++i) {
        const Transformation& s = sg.elements[i];
        if (reach1.reach(s.apply(p), q) != reach1.reach(s.apply(q), q)) {
          Witness w;
          w.states = {p, q};
          w.words.push_back(sg.word_of(i));
          w.note = "element condition fails";
          return Verdict::fail(Violation::lt_element_condition, std::move(w));
        }
      }
    }
  }
  return Verdict::pass();
}

}  // namespace ltt
