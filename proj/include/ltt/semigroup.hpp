#pragma once

#include <cstdint>
#include <vector>

#include "ltt/dfa.hpp"

namespace ltt {

inline constexpr std::size_t kDefaultSemigroupBudget = 50000;

/// A total self-map of the state set, i.e. the action of some nonempty word.
struct Transformation {
  std::vector<std::int32_t> image;

  int degree() const { return static_cast<int>(image.size()); }
  int apply(int s) const { return image[s]; }

  /// Action of the concatenated word: *this first, then g.
  Transformation then(const Transformation& g) const {
    Transformation out;
    out.image.resize(image.size());
    for (std::size_t s = 0; s < image.size(); ++s) out.image[s] = g.image[image[s]];
    return out;
  }

  bool operator==(const Transformation&) const = default;
};

/// Tail and cycle length of the power sequence x, x^2, x^3, ...
struct PowerShape {
  int tail;   // first power index lying on the eventual cycle (>= 1)
  int cycle;  // cycle length (1 for aperiodic elements)
};

PowerShape power_shape(const Transformation& x);

/// x^m for the minimal m making x^m idempotent.
Transformation idempotent_power(const Transformation& x);

/// The closure of the letter transformations under composition, in BFS
/// order, so each element's witness word is shortest (ties broken by letter
/// order). Witness words are stored as (parent, last letter) links.
struct TransitionSemigroup {
  int n = 0;
  std::vector<Transformation> elements;
  std::vector<std::int32_t> parent;       // -1 for letter generators
  std::vector<std::int32_t> last_letter;
  std::vector<char> idempotent;
  std::vector<std::int32_t> letter_element;  // letter -> element id

  int size() const { return static_cast<int>(elements.size()); }

  Word word_of(int id) const {
    Word w;
    for (std::int32_t e = id; e != -1; e = parent[e]) w.push_back(last_letter[e]);
    std::reverse(w.begin(), w.end());
    return w;
  }
};

/// Breadth-first closure; throws CapacityError past `budget` elements.
TransitionSemigroup generate_semigroup(const Dfa& d,
                                       std::size_t budget = kDefaultSemigroupBudget);

/// True iff every element's power sequence ends in a cycle of length 1.
/// Witness: words = {witness word of an element with longer cycle}.
Verdict is_aperiodic(const TransitionSemigroup& s);

/// Checks e a f u e b f == e b f u e a f for all idempotents e, f and all
/// elements a, u, b. Witness: words = {e, f, a, u, b}, states = {z, za, zb}
/// where z distinguishes the two products.
Verdict check_identity_eq1(const TransitionSemigroup& s);

/// Aperiodicity plus the idempotent identity: the transition-semigroup
/// criterion for local threshold testability.
Verdict oracle_is_ltt(const Dfa& d, std::size_t budget = kDefaultSemigroupBudget);

struct OracleRun {
  Verdict verdict;
  std::size_t semigroup_size = 0;
  double generate_ms = 0;
  double scan_ms = 0;
  double total_ms = 0;
};

OracleRun run_oracle_ltt(const Dfa& d, std::size_t budget = kDefaultSemigroupBudget);

}  // namespace ltt
