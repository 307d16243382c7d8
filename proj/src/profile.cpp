#include "ltt/profile.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ltt {

Profile factor_profile(const Word& w, int k, int l) {
  if (w.empty()) throw std::invalid_argument("factor_profile: empty word");
  if (k < 1 || l < 1) throw std::invalid_argument("factor_profile: k, l must be >= 1");
  Profile p;
  const int keep = std::min<int>(k - 1, static_cast<int>(w.size()));
  p.prefix.assign(w.begin(), w.begin() + keep);
  p.suffix.assign(w.end() - keep, w.end());
  for (std::size_t i = 0; i + k <= w.size(); ++i) {
    Word f(w.begin() + i, w.begin() + i + k);
    int& c = p.counts[f];
    c = std::min(c + 1, l);
  }
  return p;
}

ProfileAutomaton::ProfileAutomaton(int letters, int k, int l, std::size_t budget)
    : letters_(letters), k_(k), l_(l), budget_(budget) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("ProfileAutomaton: k, l must be >= 1");
  intern(Profile{});  // state 0: the empty word
}

int ProfileAutomaton::intern(Profile p) {
  auto it = index_.find(p);
  if (it != index_.end()) return it->second;
  if (profiles_.size() >= budget_)
    throw CapacityError("profile state budget exceeded", profiles_.size() + 1,
                        budget_);
  const int id = static_cast<int>(profiles_.size());
  index_.emplace(p, id);
  profiles_.push_back(std::move(p));
  cached_.emplace_back(letters_, -1);
  return id;
}

int ProfileAutomaton::step(int state, int letter) {
  if (int hit = cached_[state][letter]; hit != -1) return hit;
  const Profile& cur = profiles_[state];
  Profile next;
  next.counts = cur.counts;
  // a new factor appears exactly when the word already has length >= k-1,
  // i.e. the stored suffix is full (k=1 makes every letter a factor)
  if (static_cast<int>(cur.suffix.size()) == k_ - 1) {
    Word f = cur.suffix;
    f.push_back(letter);
    int& c = next.counts[f];
    c = std::min(c + 1, l_);
  }
  next.prefix = cur.prefix;
  if (static_cast<int>(next.prefix.size()) < k_ - 1) next.prefix.push_back(letter);
  next.suffix = cur.suffix;
  next.suffix.push_back(letter);
  if (static_cast<int>(next.suffix.size()) > k_ - 1)
    next.suffix.erase(next.suffix.begin());
  const int id = intern(std::move(next));
  cached_[state][letter] = id;
  return id;
}

Verdict is_kl_testable(const Dfa& d, int k, int l, std::size_t budget) {
  if (!d.initial || !d.accepting)
    throw std::invalid_argument("is_kl_testable requires initial and accepting");
  const int n = d.n;
  const int m = d.letters();
  ProfileAutomaton pa(m, k, l, budget);

  struct Visit {
    std::int64_t parent;
    int letter;
  };
  // key = profile state * n + dfa state
  std::unordered_map<std::int64_t, Visit> visited;
  std::vector<std::int64_t> queue;
  const std::int64_t root = static_cast<std::int64_t>(pa.start()) * n + *d.initial;
  visited.emplace(root, Visit{-1, -1});
  queue.push_back(root);

  // per profile: first reached state and whether it is accepting
  std::unordered_map<int, std::int64_t> first_of_profile;

  auto word_to = [&](std::int64_t key) {
    Word w;
    while (true) {
      const Visit& v = visited.at(key);
      if (v.parent == -1) break;
      w.push_back(v.letter);
      key = v.parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int64_t key = queue[head];
    const int ps = static_cast<int>(key / n);
    const int q = static_cast<int>(key % n);
    if (ps != pa.start()) {
      auto [it, fresh] = first_of_profile.try_emplace(ps, key);
      if (!fresh) {
        const int q0 = static_cast<int>(it->second % n);
        if (d.is_accepting(q0) != d.is_accepting(q)) {
          Witness w;
          w.states = {q0, q};
          w.words = {word_to(it->second), word_to(key)};
          w.note = "words with equal profiles split the language";
          return Verdict::fail(Violation::profile_conflict, std::move(w));
        }
      }
    }
    for (int a = 0; a < m; ++a) {
      const int nps = pa.step(ps, a);
      const std::int64_t nkey = static_cast<std::int64_t>(nps) * n + d.next(q, a);
      if (visited.size() >= budget && !visited.count(nkey))
        throw CapacityError("profile product budget exceeded", visited.size() + 1,
                            budget);
      auto [it, fresh] = visited.try_emplace(nkey, Visit{key, a});
      if (fresh) queue.push_back(nkey);
    }
  }
  return Verdict::pass();
}

WitnessSearch search_witness(const Dfa& d, int kmax, int lmax, std::size_t budget) {
  if (!d.initial || !d.accepting)
    throw std::invalid_argument("search_witness requires initial and accepting");
  std::vector<std::pair<int, int>> order;
  for (int k = 1; k <= kmax; ++k)
    for (int l = 1; l <= lmax; ++l) order.emplace_back(k, l);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) {
                     return a.first + a.second < b.first + b.second ||
                            (a.first + a.second == b.first + b.second &&
                             a.first < b.first);
                   });
  WitnessSearch out;
  for (auto [k, l] : order) {
    try {
      if (is_kl_testable(d, k, l, budget).ok) {
        out.found = {k, l};
        return out;
      }
    } catch (const CapacityError&) {
      out.skipped.emplace_back(k, l);
    }
  }
  return out;
}

}  // namespace ltt
