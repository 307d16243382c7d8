#include "ltt/ltt_check.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <thread>

namespace ltt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

PairTables build_pair_tables(const Dfa& d, const CheckOptions& opts) {
  PairTables t;
  t.g1 = transition_graph(d);
  t.reach1 = reachability_closure(t.g1, opts.workers, opts.memory_budget_bytes);
  t.scc2 = scc_product(d, 2, opts.memory_budget_bytes);
  return t;
}

namespace {

// Shortest nonempty word fixing the pair (p,q); BFS over implicit pair nodes.
// Precondition: (p,q) lies on a cycle.
Word pair_cycle_word(const LabeledDigraph& g1, int p, int q) {
  const int n = g1.nodes;
  const int m = g1.letters;
  const int target = p * n + q;
  std::vector<std::int32_t> parent(static_cast<std::size_t>(n) * n, -1),
      parent_letter(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::int32_t> queue;
  queue.push_back(target);
  parent[target] = target;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t v = queue[head];
    const int vp = v / n, vq = v % n;
    for (int a = 0; a < m; ++a) {
      const std::int32_t w = g1.next(vp, a) * n + g1.next(vq, a);
      if (w == target) {
        Word word;
        for (std::int32_t x = v; x != target; x = parent[x])
          word.push_back(parent_letter[x]);
        std::reverse(word.begin(), word.end());
        word.push_back(a);
        return word;
      }
      if (parent[w] == -1) {
        parent[w] = v;
        parent_letter[w] = a;
        queue.push_back(w);
      }
    }
  }
  return {};
}

}  // namespace

Verdict check_pair_collapse(const PairTables& t) {
  const int n = t.g1.nodes;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      if (!t.scc2.on_cycle[static_cast<std::size_t>(p) * n + q]) continue;
      if (!(t.reach1.reach(p, q) && t.reach1.reach(q, p))) continue;
      Witness w;
      w.states = {p, q};
      w.words.push_back(pair_cycle_word(t.g1, p, q));
      w.words.push_back(*shortest_word(t.g1, p, q));
      w.words.push_back(*shortest_word(t.g1, q, p));
      w.note = "distinct mutually reachable states fixed by a common word";
      return Verdict::fail(Violation::pair_collapse, std::move(w));
    }
  }
  return Verdict::pass();
}

LttTables build_ltt_tables(const Dfa& d, PairTables pair, const CheckOptions& opts) {
  LttTables t;
  t.pair = std::move(pair);
  t.scc1 = scc_product(d, 1, opts.memory_budget_bytes);
  LabeledDigraph g2 = product_graph(d, 2, opts.memory_budget_bytes);
  t.reach2 = reachability_closure(g2, opts.workers, opts.memory_budget_bytes);
  t.scc3 = scc_product(d, 3, opts.memory_budget_bytes);
  return t;
}

TsccResult compute_tscc_table(const Dfa& d, const LttTables& t,
                              std::size_t budget_bytes) {
  const int n = d.n;
  const std::size_t un = static_cast<std::size_t>(n);
  TsccResult out;
  out.table.n = n;
  const std::size_t total = un * un * un * un;
  if (total * sizeof(std::int32_t) > budget_bytes)
    throw CapacityError("quadruple table exceeds memory budget",
                        total * sizeof(std::int32_t), budget_bytes);
  out.table.entries.assign(total, TsccTable::kNotApplicable);

  const ReachTable& reach1 = t.pair.reach1;
  const ReachTable& reach2 = t.reach2;
  const SccDecomposition& scc2 = t.pair.scc2;

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (!reach1.reach(p, q)) continue;
      const int qn = q * n;
      for (int r = 0; r < n; ++r) {
        if (!reach1.reach(p, r)) continue;
        if (!scc2.on_cycle[qn + r]) continue;
        const std::size_t base3 = ((un * p + q) * un + r) * un;
        for (int r1 = 0; r1 < n; ++r1) {
          if (!reach1.reach(r, r1)) continue;
          if (!scc2.on_cycle[static_cast<std::size_t>(p) * n + r1]) continue;
          const int pr1 = p * n + r1;
          std::int32_t entry = TsccTable::kEmpty;
          for (int tt = 0; tt < n; ++tt) {
            if (!reach2.reach(pr1, qn + tt)) continue;
            if (!t.scc3.on_cycle[(static_cast<std::size_t>(qn) + r) * un + tt])
              continue;
            const std::int32_t comp = t.scc1.component[tt];
            if (entry == TsccTable::kEmpty) {
              entry = comp;
            } else if (entry != comp) {
              // recover the earlier member for the witness
              int first = -1;
              for (int t0 = 0; t0 < tt; ++t0) {
                if (reach2.reach(pr1, qn + t0) &&
                    t.scc3.on_cycle[(static_cast<std::size_t>(qn) + r) * un + t0] &&
                    t.scc1.component[t0] == entry) {
                  first = t0;
                  break;
                }
              }
              Witness w;
              w.states = {p, q, r, r1, first, tt};
              w.components = {entry, comp};
              w.note = "witness set spans two components";
              out.consistent = false;
              out.verdict = Verdict::fail(Violation::tscc_inconsistent, std::move(w));
              return out;
            }
          }
          out.table.entries[base3 + r1] = entry;
        }
      }
    }
  }
  return out;
}

namespace {

struct Condition2Hit {
  int p, q, r, q1, r1;
  std::int32_t a, b;

  std::array<int, 5> key() const { return {p, q, r, q1, r1}; }
};

std::optional<Condition2Hit> scan_condition2(const TsccTable& table,
                                             const LttTables& t, int p_begin,
                                             int p_end) {
  const int n = table.n;
  const std::size_t un = static_cast<std::size_t>(n);
  const ReachTable& reach2 = t.reach2;
  for (int p = p_begin; p < p_end; ++p) {
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        const std::size_t base_a = ((un * p + q) * un + r) * un;
        const std::size_t base_b = ((un * p + r) * un + q) * un;
        const int qr = q * n + r;
        for (int q1 = 0; q1 < n; ++q1) {
          const std::int32_t b = table.entries[base_b + q1];
          if (b < 0) continue;
          const std::size_t cyc3_base = (un * p + q1) * un;
          const int q1n = q1 * n;
          for (int r1 = 0; r1 < n; ++r1) {
            const std::int32_t a = table.entries[base_a + r1];
            if (a < 0 || a == b) continue;
            if (!t.scc3.on_cycle[cyc3_base + r1]) continue;
            if (!reach2.reach(qr, q1n + r1)) continue;
            return Condition2Hit{p, q, r, q1, r1, a, b};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict check_condition2(const TsccTable& table, const LttTables& t, int workers) {
  const int n = table.n;
  workers = std::max(1, std::min(workers, n));
  std::optional<Condition2Hit> hit;
  if (workers == 1) {
    hit = scan_condition2(table, t, 0, n);
  } else {
    // partition on p; keep the lexicographically first hit so the witness is
    // independent of scheduling
    std::vector<std::optional<Condition2Hit>> found(workers);
    std::vector<std::thread> pool;
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, w, begin, end] {
        found[w] = scan_condition2(table, t, begin, end);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : found)
      if (f && (!hit || f->key() < hit->key())) hit = f;
  }
  if (!hit) return Verdict::pass();
  Witness w;
  w.states = {hit->p, hit->q, hit->r, hit->q1, hit->r1};
  w.components = {hit->a, hit->b};
  w.note = "table entries disagree";
  return Verdict::fail(Violation::tscc_mismatch, std::move(w));
}

Verdict is_locally_threshold_testable(const Dfa& d, const CheckOptions& opts) {
  return run_ltt_check(d, opts).verdict;
}

LttRun run_ltt_check(const Dfa& d, const CheckOptions& opts) {
  LttRun run;
  const auto t0 = Clock::now();

  auto t = Clock::now();
  PairTables pair = build_pair_tables(d, opts);
  run.times.add("pair_tables", ms_since(t));

  t = Clock::now();
  Verdict v = check_pair_collapse(pair);
  run.times.add("pair_collapse", ms_since(t));
  if (!v.ok) {
    run.verdict = std::move(v);
    run.times.total_ms = ms_since(t0);
    return run;
  }

  t = Clock::now();
  LttTables tables = build_ltt_tables(d, std::move(pair), opts);
  run.times.add("triple_tables", ms_since(t));

  t = Clock::now();
  TsccResult tscc = compute_tscc_table(d, tables, opts.memory_budget_bytes);
  run.times.add("tscc", ms_since(t));
  if (!tscc.consistent) {
    run.verdict = std::move(tscc.verdict);
    run.times.total_ms = ms_since(t0);
    return run;
  }

  t = Clock::now();
  run.verdict = check_condition2(tscc.table, tables, opts.workers);
  run.times.add("condition2", ms_since(t));
  run.times.total_ms = ms_since(t0);
  return run;
}

}  // namespace ltt
