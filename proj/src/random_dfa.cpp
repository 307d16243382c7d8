#include "ltt/random_dfa.hpp"

namespace ltt {

std::vector<std::string> default_alphabet(int m) {
  std::vector<std::string> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (i < 26)
      out.emplace_back(1, static_cast<char>('a' + i));
    else
      out.push_back("l" + std::to_string(i));
  }
  return out;
}

Dfa random_dfa(int n, int m, SplitMix64& rng) {
  Dfa d;
  d.n = n;
  d.alphabet = default_alphabet(m);
  d.delta.resize(static_cast<std::size_t>(n) * m);
  for (int s = 0; s < n; ++s)
    for (int a = 0; a < m; ++a)
      d.next(s, a) = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return d;
}

}  // namespace ltt
