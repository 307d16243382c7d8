#include "ltt/semigroup.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace ltt {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::int32_t x : v) {
      h ^= static_cast<std::uint64_t>(x) + 1;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

PowerShape power_shape(const Transformation& x) {
  std::unordered_map<std::vector<std::int32_t>, int, ImageHash> seen;
  Transformation p = x;
  int i = 1;
  while (true) {
    auto it = seen.find(p.image);
    if (it != seen.end()) return PowerShape{it->second, i - it->second};
    seen.emplace(p.image, i);
    p = p.then(x);
    ++i;
  }
}

Transformation idempotent_power(const Transformation& x) {
  const PowerShape shape = power_shape(x);
  // the unique idempotent power is x^m with m the smallest multiple of the
  // cycle length that is >= the tail index
  int m = ((shape.tail + shape.cycle - 1) / shape.cycle) * shape.cycle;
  Transformation p = x;
  for (int i = 1; i < m; ++i) p = p.then(x);
  return p;
}

TransitionSemigroup generate_semigroup(const Dfa& d, std::size_t budget) {
  const int n = d.n;
  const int m = d.letters();
  if (budget < static_cast<std::size_t>(m))
    throw CapacityError("semigroup budget below letter count",
                        static_cast<std::size_t>(m), budget);

  TransitionSemigroup sg;
  sg.n = n;
  sg.letter_element.assign(m, -1);
  std::unordered_map<std::vector<std::int32_t>, int, ImageHash> index;

  std::vector<Transformation> letters(m);
  for (int a = 0; a < m; ++a) {
    letters[a].image.resize(n);
    for (int s = 0; s < n; ++s) letters[a].image[s] = d.next(s, a);
  }

  auto intern = [&](Transformation t, int par, int letter) -> int {
    auto it = index.find(t.image);
    if (it != index.end()) return it->second;
    if (sg.elements.size() >= budget)
      throw CapacityError("semigroup exceeds element budget",
                          sg.elements.size() + 1, budget);
    const int id = sg.size();
    index.emplace(t.image, id);
    sg.elements.push_back(std::move(t));
    sg.parent.push_back(par);
    sg.last_letter.push_back(letter);
    return id;
  };

  for (int a = 0; a < m; ++a)
    sg.letter_element[a] = intern(letters[a], -1, a);

  for (int head = 0; head < sg.size(); ++head) {
    for (int a = 0; a < m; ++a) {
      Transformation next = sg.elements[head].then(letters[a]);
      intern(std::move(next), head, a);
    }
  }

  sg.idempotent.resize(sg.size());
  for (int i = 0; i < sg.size(); ++i)
    sg.idempotent[i] = sg.elements[i].then(sg.elements[i]) == sg.elements[i];
  return sg;
}

Verdict is_aperiodic(const TransitionSemigroup& s) {
  for (int i = 0; i < s.size(); ++i) {
    const PowerShape shape = power_shape(s.elements[i]);
    if (shape.cycle > 1) {
      Witness w;
      w.words.push_back(s.word_of(i));
      w.components = {shape.tail, shape.cycle};
      w.note = "power sequence cycles with period " + std::to_string(shape.cycle);
      return Verdict::fail(Violation::not_aperiodic, std::move(w));
    }
  }
  return Verdict::pass();
}

Verdict check_identity_eq1(const TransitionSemigroup& s) {
  const int n = s.n;
  std::vector<int> idems;
  for (int i = 0; i < s.size(); ++i)
    if (s.idempotent[i]) idems.push_back(i);

  // Distinct values of eaf are what matter; remember the first witness `a`
  // for each value so reported witnesses are deterministic.
  std::vector<std::pair<Transformation, int>> efa;
  std::unordered_map<std::vector<std::int32_t>, int, ImageHash> seen;

  for (int ei : idems) {
    const Transformation& e = s.elements[ei];
    for (int fi : idems) {
      const Transformation& f = s.elements[fi];
      efa.clear();
      seen.clear();
      for (int ai = 0; ai < s.size(); ++ai) {
        Transformation x = e.then(s.elements[ai]).then(f);
        if (seen.emplace(x.image, ai).second) efa.emplace_back(std::move(x), ai);
      }
      for (std::size_t i = 0; i < efa.size(); ++i) {
        const auto& X = efa[i].first.image;
        for (std::size_t j = i + 1; j < efa.size(); ++j) {
          const auto& Y = efa[j].first.image;
          for (int ui = 0; ui < s.size(); ++ui) {
            const auto& U = s.elements[ui].image;
            for (int z = 0; z < n; ++z) {
              const int lhs = Y[U[X[z]]];  // z . (eaf u ebf)
              const int rhs = X[U[Y[z]]];  // z . (ebf u eaf)
              if (lhs != rhs) {
                Witness w;
                w.words = {s.word_of(ei), s.word_of(fi), s.word_of(efa[i].second),
                           s.word_of(ui), s.word_of(efa[j].second)};
                w.states = {z, lhs, rhs};
                w.note = "eafuebf != ebfueaf";
                return Verdict::fail(Violation::identity_violation, std::move(w));
              }
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict oracle_is_ltt(const Dfa& d, std::size_t budget) {
  return run_oracle_ltt(d, budget).verdict;
}

OracleRun run_oracle_ltt(const Dfa& d, std::size_t budget) {
  OracleRun run;
  const auto t0 = std::chrono::steady_clock::now();
  TransitionSemigroup s = generate_semigroup(d, budget);
  run.generate_ms = ms_since(t0);
  run.semigroup_size = static_cast<std::size_t>(s.size());

  const auto t1 = std::chrono::steady_clock::now();
  Verdict v = is_aperiodic(s);
  if (v.ok) v = check_identity_eq1(s);
  run.scan_ms = ms_since(t1);
  run.verdict = std::move(v);
  run.total_ms = ms_since(t0);
  return run;
}

}  // namespace ltt
