#pragma once

// Shared test utilities. The brute-force pieces here are deliberately
// independent of the library's graph machinery: reachability and cycle
// detection walk the raw transition table so they can act as oracles.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ltt/dfa.hpp"
#include "ltt/random_dfa.hpp"
#include "ltt/semigroup.hpp"

namespace testutil {

using ltt::Dfa;
using ltt::Word;

/// rows[s][a] = target state; letters named a, b, c, ...
inline Dfa make_dfa(const std::vector<std::vector<int>>& rows) {
  Dfa d;
  d.n = static_cast<int>(rows.size());
  const int m = static_cast<int>(rows[0].size());
  d.alphabet = ltt::default_alphabet(m);
  for (const auto& row : rows)
    for (int t : row) d.delta.push_back(t);
  return d;
}

// the named instances used across the test suite
inline Dfa one_state() { return make_dfa({{0}}); }                 // single self-loop
inline Dfa two_cycle() { return make_dfa({{1}, {0}}); }            // a swaps 0 and 1
inline Dfa sink_pair() { return make_dfa({{1, 0}, {1, 1}}); }      // a sends all to 1, b = id

/// All complete DFAs with n states over m letters, in mixed-radix order.
inline void for_each_complete_dfa(int n, int m, const std::function<void(const Dfa&)>& f) {
  std::vector<int> digits(static_cast<std::size_t>(n) * m, 0);
  while (true) {
    Dfa d;
    d.n = n;
    d.alphabet = ltt::default_alphabet(m);
    d.delta.assign(digits.begin(), digits.end());
    f(d);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) {
      digits[i] = 0;
      ++i;
    }
    if (i == digits.size()) break;
  }
}

/// Brute-force tuple reachability over the k-fold product, straight off the
/// transition table.
inline std::set<std::vector<int>> brute_reachable(const Dfa& d,
                                                  const std::vector<int>& from) {
  std::set<std::vector<int>> seen{from};
  std::deque<std::vector<int>> queue{from};
  while (!queue.empty()) {
    std::vector<int> v = queue.front();
    queue.pop_front();
    for (int a = 0; a < d.letters(); ++a) {
      std::vector<int> w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = d.next(v[i], a);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

inline bool brute_reach(const Dfa& d, std::vector<int> from, std::vector<int> to) {
  return brute_reachable(d, from).count(to) > 0;
}

/// Does some nonempty word fix the tuple?
inline bool brute_on_cycle(const Dfa& d, const std::vector<int>& node) {
  for (int a = 0; a < d.letters(); ++a) {
    std::vector<int> w(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) w[i] = d.next(node[i], a);
    if (brute_reach(d, w, node)) return true;
  }
  return false;
}

inline std::vector<int> apply_word_tuple(const Dfa& d, std::vector<int> node,
                                         const Word& w) {
  for (int a : w)
    for (auto& s : node) s = d.next(s, a);
  return node;
}

/// Classical local-testability oracle on the transition semigroup: every
/// local submonoid eSe must be a semilattice (idempotent and commutative).
inline bool semilattice_locally_testable(const ltt::TransitionSemigroup& s) {
  std::vector<int> idems;
  for (int i = 0; i < s.size(); ++i)
    if (s.idempotent[i]) idems.push_back(i);
  for (int ei : idems) {
    const ltt::Transformation& e = s.elements[ei];
    std::set<std::vector<std::int32_t>> seen;
    std::vector<ltt::Transformation> ese;
    for (int i = 0; i < s.size(); ++i) {
      ltt::Transformation x = e.then(s.elements[i]).then(e);
      if (seen.insert(x.image).second) ese.push_back(std::move(x));
    }
    for (const auto& x : ese)
      if (!(x.then(x) == x)) return false;
    for (std::size_t i = 0; i < ese.size(); ++i)
      for (std::size_t j = i + 1; j < ese.size(); ++j)
        if (!(ese[i].then(ese[j]) == ese[j].then(ese[i]))) return false;
  }
  return true;
}

/// Test-only minimization: reachable part from initial, then Moore
/// refinement. Keeps the alphabet; requires initial and accepting.
inline Dfa minimize_dfa(const Dfa& d) {
  const int m = d.letters();
  std::vector<int> order;
  std::vector<int> idx(d.n, -1);
  order.push_back(*d.initial);
  idx[*d.initial] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int a = 0; a < m; ++a) {
      const int t = d.next(order[head], a);
      if (idx[t] == -1) {
        idx[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  const int nn = static_cast<int>(order.size());
  std::vector<std::vector<int>> delta(nn, std::vector<int>(m));
  std::vector<char> acc(nn, 0);
  for (int i = 0; i < nn; ++i) {
    for (int a = 0; a < m; ++a) delta[i][a] = idx[d.next(order[i], a)];
    acc[i] = d.is_accepting(order[i]);
  }
  std::vector<int> cls(acc.begin(), acc.end());
  while (true) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next(nn);
    for (int q = 0; q < nn; ++q) {
      std::vector<int> key{cls[q]};
      for (int a = 0; a < m; ++a) key.push_back(cls[delta[q][a]]);
      auto [it, fresh] = sig.emplace(key, static_cast<int>(sig.size()));
      next[q] = it->second;
    }
    if (next == cls) break;
    cls = std::move(next);
  }
  const int k = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfa out;
  out.n = k;
  out.alphabet = d.alphabet;
  out.delta.assign(static_cast<std::size_t>(k) * m, 0);
  std::vector<int> accepting;
  std::vector<char> acc_seen(k, 0);
  for (int q = 0; q < nn; ++q) {
    for (int a = 0; a < m; ++a) out.next(cls[q], a) = cls[delta[q][a]];
    if (acc[q] && !acc_seen[cls[q]]) {
      acc_seen[cls[q]] = 1;
      accepting.push_back(cls[q]);
    }
  }
  std::sort(accepting.begin(), accepting.end());
  out.initial = cls[0];
  out.accepting = std::move(accepting);
  return out;
}

// ---- witness replay: confirm a failed verdict from the raw table ----

inline bool replay_pair_collapse(const Dfa& d, const ltt::Witness& w) {
  if (w.states.size() != 2 || w.words.size() != 3) return false;
  const int p = w.states[0], q = w.states[1];
  if (p == q) return false;
  const Word& cyc = w.words[0];
  if (cyc.empty()) return false;
  if (apply_word_tuple(d, {p, q}, cyc) != std::vector<int>{p, q}) return false;
  if (apply_word_tuple(d, {p}, w.words[1]) != std::vector<int>{q}) return false;
  if (apply_word_tuple(d, {q}, w.words[2]) != std::vector<int>{p}) return false;
  return true;
}

/// Recompute the witness set condition for one quadruple member.
inline bool tscc_member(const Dfa& d, int p, int q, int r, int r1, int t) {
  return brute_reach(d, {p, r1}, {q, t}) && brute_on_cycle(d, {q, r, t});
}

inline bool tscc_applicable(const Dfa& d, int p, int q, int r, int r1) {
  return brute_reach(d, {p}, {r}) && brute_reach(d, {r}, {r1}) &&
         brute_reach(d, {p}, {q}) && brute_on_cycle(d, {p, r1}) &&
         brute_on_cycle(d, {q, r});
}

inline bool replay_tscc_inconsistent(const Dfa& d, const ltt::Witness& w) {
  if (w.states.size() != 6) return false;
  const int p = w.states[0], q = w.states[1], r = w.states[2], r1 = w.states[3];
  const int t1 = w.states[4], t2 = w.states[5];
  if (!tscc_applicable(d, p, q, r, r1)) return false;
  if (!tscc_member(d, p, q, r, r1, t1)) return false;
  if (!tscc_member(d, p, q, r, r1, t2)) return false;
  // different components: not mutually reachable
  return !(brute_reach(d, {t1}, {t2}) && brute_reach(d, {t2}, {t1}));
}

inline bool replay_tscc_mismatch(const Dfa& d, const ltt::Witness& w) {
  if (w.states.size() != 5) return false;
  const int p = w.states[0], q = w.states[1], r = w.states[2];
  const int q1 = w.states[3], r1 = w.states[4];
  if (!tscc_applicable(d, p, q, r, r1) || !tscc_applicable(d, p, r, q, q1))
    return false;
  if (!brute_on_cycle(d, {p, q1, r1})) return false;
  if (!brute_reach(d, {q, r}, {q1, r1})) return false;
  // the two witness sets must be non-empty and live in different components
  std::vector<int> ta, tb;
  for (int t = 0; t < d.n; ++t) {
    if (tscc_member(d, p, q, r, r1, t)) ta.push_back(t);
    if (tscc_member(d, p, r, q, q1, t)) tb.push_back(t);
  }
  if (ta.empty() || tb.empty()) return false;
  return !(brute_reach(d, {ta[0]}, {tb[0]}) && brute_reach(d, {tb[0]}, {ta[0]}));
}

inline bool replay_lt_fast(const Dfa& d, const ltt::Witness& w) {
  if (w.states.size() != 4 || w.letters.size() != 1 || w.words.size() != 1)
    return false;
  const int p = w.states[0], q = w.states[1], r = w.states[2], s = w.states[3];
  const int a = w.letters[0];
  if (!brute_on_cycle(d, {p, q}) || !brute_reach(d, {p}, {q})) return false;
  if (apply_word_tuple(d, {p, q}, w.words[0]) != std::vector<int>{r, s}) return false;
  // every step of the stored path must satisfy the edge-keep predicate
  std::vector<int> node{p, q};
  for (int letter : w.words[0]) {
    const int ss = d.next(node[1], letter);
    if (!(brute_reach(d, {ss}, {node[1]}) || brute_reach(d, {ss}, {node[0]})))
      return false;
    node = {d.next(node[0], letter), ss};
  }
  return brute_reach(d, {d.next(r, a)}, {s}) != brute_reach(d, {d.next(s, a)}, {s});
}

inline bool replay_lt_direct(const Dfa& d, const ltt::Witness& w) {
  if (w.states.size() != 4 || w.letters.size() != 1) return false;
  const int p = w.states[0], q = w.states[1], r = w.states[2], s = w.states[3];
  const int a = w.letters[0];
  if (!brute_on_cycle(d, {p, q}) || !brute_reach(d, {p}, {q})) return false;
  if (!brute_reach(d, {p, q}, {r, s})) return false;
  if (!(brute_reach(d, {s}, {q}) && brute_reach(d, {q}, {s}))) return false;
  return brute_reach(d, {d.next(r, a)}, {s}) != brute_reach(d, {d.next(s, a)}, {s});
}

inline bool replay_lt_element(const Dfa& d, const ltt::Witness& w) {
  if (w.states.size() != 2 || w.words.size() != 1) return false;
  const int p = w.states[0], q = w.states[1];
  if (!brute_on_cycle(d, {p, q}) || !brute_reach(d, {p}, {q})) return false;
  const int ps = d.apply_word(p, w.words[0]);
  const int qs = d.apply_word(q, w.words[0]);
  return brute_reach(d, {ps}, {q}) != brute_reach(d, {qs}, {q});
}

inline bool replay_not_aperiodic(const Dfa& d, const ltt::Witness& w) {
  if (w.words.size() != 1 || w.words[0].empty()) return false;
  ltt::Transformation x;
  x.image.resize(d.n);
  for (int s = 0; s < d.n; ++s) x.image[s] = d.apply_word(s, w.words[0]);
  return ltt::power_shape(x).cycle > 1;
}

inline bool replay_identity_violation(const Dfa& d, const ltt::Witness& w) {
  if (w.words.size() != 5 || w.states.size() != 3) return false;
  auto act = [&](int s, const Word& word) { return d.apply_word(s, word); };
  const Word &e = w.words[0], &f = w.words[1], &a = w.words[2], &u = w.words[3],
             &b = w.words[4];
  // e, f must be idempotent actions
  for (int s = 0; s < d.n; ++s) {
    if (act(act(s, e), e) != act(s, e)) return false;
    if (act(act(s, f), f) != act(s, f)) return false;
  }
  const int z = w.states[0];
  const int lhs = act(act(act(act(act(act(act(z, e), a), f), u), e), b), f);
  const int rhs = act(act(act(act(act(act(act(z, e), b), f), u), e), a), f);
  return lhs != rhs && lhs == w.states[1] && rhs == w.states[2];
}

}  // namespace testutil
