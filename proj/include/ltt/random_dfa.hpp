#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ltt/dfa.hpp"

namespace ltt {

/// splitmix64 (Steele/Lea/Flood): tiny, well mixed, and identical on every
/// platform, which is what makes seeded corpora byte-reproducible.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound) via rejection below 2^64 mod bound.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x < threshold);
    return x % bound;
  }
};

/// "a".."z" for small alphabets, then "l26", "l27", ...
std::vector<std::string> default_alphabet(int m);

/// Uniform complete transition table; entries drawn row-major
/// (state-major, letter-minor), one below(n) call each.
Dfa random_dfa(int n, int m, SplitMix64& rng);

}  // namespace ltt
