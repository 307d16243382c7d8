#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ltt/dfa.hpp"

namespace ltt {

inline constexpr std::size_t kDefaultProfileBudget = 200000;

/// The (k,l) view of a nonempty word: its prefix and suffix of length
/// min(k-1, |w|) and the number of occurrences of each length-k factor,
/// capped at l. Factors with at least j occurrences, for any j <= l, are
/// exactly { f : counts[f] >= j }. Zero counts are never stored.
struct Profile {
  Word prefix;
  Word suffix;
  std::map<Word, int> counts;

  bool operator==(const Profile&) const = default;
  auto operator<=>(const Profile&) const = default;
};

/// Exact profile of a nonempty word; throws std::invalid_argument on the
/// empty word (the definitions live in nonempty words).
Profile factor_profile(const Word& w, int k, int l);

/// Deterministic transition system over the reachable profiles, built
/// on demand. State 0 is the empty-word start profile; it is never reached
/// again (nonempty words have a nonempty prefix or a nonzero count).
class ProfileAutomaton {
 public:
  ProfileAutomaton(int letters, int k, int l,
                   std::size_t state_budget = kDefaultProfileBudget);

  int start() const { return 0; }
  int k() const { return k_; }
  int l() const { return l_; }
  int size() const { return static_cast<int>(profiles_.size()); }
  const Profile& profile(int state) const { return profiles_[state]; }

  /// Profile reached by appending one letter; interns new profiles and
  /// throws CapacityError past the state budget.
  int step(int state, int letter);

 private:
  int letters_;
  int k_;
  int l_;
  std::size_t budget_;
  std::vector<Profile> profiles_;
  std::map<Profile, int> index_;
  std::vector<std::vector<int>> cached_;  // memoized transitions, -1 unknown

  int intern(Profile p);
};

/// Decides whether the accepted language is l-threshold k-testable by
/// grouping the reachable (profile, state) product by profile: the language
/// is (k,l)-testable iff every group is acceptance-uniform. Requires
/// initial and accepting. Witness: states = {s1, s2}, words = {u, v} with
/// equal profiles and exactly one of u, v accepted.
Verdict is_kl_testable(const Dfa& d, int k, int l,
                       std::size_t budget = kDefaultProfileBudget);

struct WitnessSearch {
  std::optional<std::pair<int, int>> found;
  std::vector<std::pair<int, int>> skipped;  // (k,l) pairs over budget
};

/// Scans (k,l) with k <= kmax, l <= lmax in increasing k+l order (ties by
/// k) and returns the first accepted pair. A hit is a sound yes; exhaustion
/// proves nothing. Budget-exceeded pairs are skipped and reported.
WitnessSearch search_witness(const Dfa& d, int kmax, int lmax,
                             std::size_t budget = kDefaultProfileBudget);

}  // namespace ltt
