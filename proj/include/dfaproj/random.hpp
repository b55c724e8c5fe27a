#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dfaproj/dfa.hpp"

namespace dfaproj {

/// Seeded generator with explicit bounded draws. mt19937_64 output is fully
/// specified by the standard and the draw helpers avoid the distribution
/// classes, so identical seeds give identical sequences on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform draw in [0, bound), bound > 0, by rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform draw in [lo, hi], inclusive.
  int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }

  bool chance(double p) {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 gen_;
};

/// Uniform random permutation via Fisher-Yates.
inline StateMap random_permutation(Rng& rng, int n) {
  StateMap perm = identity_map(n);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
  return perm;
}

inline std::vector<std::string> default_symbol_names(int letters) {
  if (letters < 0 || letters > 26) throw parameter_error("letter count out of range");
  std::vector<std::string> names;
  for (int i = 0; i < letters; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

/// Permutation DFA with letterwise uniform random permutations, a uniform
/// initial state, and each state final with probability 1/2.
inline Dfa random_permutation_dfa(Rng& rng, int n, int letters) {
  Dfa d = make_empty_dfa(n, default_symbol_names(letters), 0, {});
  for (int x = 0; x < letters; ++x)
    set_letter_permutation(d, x, random_permutation(rng, n));
  d.initial = static_cast<int>(rng.below(n));
  for (int q = 0; q < n; ++q)
    if (rng.below(2) == 1) d.finals.insert(q);
  return d;
}

/// Partial DFA with independent uniform targets; each transition is left
/// undefined with the given probability.
inline Dfa random_partial_dfa(Rng& rng, int n, int letters, double undefined_prob) {
  Dfa d = make_empty_dfa(n, default_symbol_names(letters), 0, {});
  for (int q = 0; q < n; ++q)
    for (int x = 0; x < letters; ++x)
      if (!rng.chance(undefined_prob))
        d.step_ref(q, x) = static_cast<int>(rng.below(n));
  d.initial = static_cast<int>(rng.below(n));
  for (int q = 0; q < n; ++q)
    if (rng.below(2) == 1) d.finals.insert(q);
  return d;
}

}  // namespace dfaproj
