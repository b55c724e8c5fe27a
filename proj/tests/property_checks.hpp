#pragma once

// Randomized law checks shared by the standalone property suite and the
// acceptance runner. Each function runs `cases` seeded cases and reports the
// first failure, if any.

#include <sstream>
#include <string>

#include "dfaproj/dfaproj.hpp"
#include "generators.hpp"

namespace testutil {

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& message) {
    if (failures++ == 0) first_failure = message;
  }
  bool ok() const { return failures == 0; }
};

/// Orbit laws on permutation DFAs: reflexivity, equal-or-disjoint orbits,
/// orbit of a set = union of member orbits, and the quiet-state criterion
/// (singleton orbit exactly when every chosen letter fixes the state).
inline PropertyResult orbit_partition_laws(std::uint64_t seed, int cases) {
  PropertyResult result;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++result.cases;
    int n = rng.range(1, 8);
    Dfa d = random_permutation_dfa(rng, n, rng.range(1, 3));
    SymbolSet sub;
    for (int x = 0; x < d.symbol_count(); ++x)
      if (rng.below(2)) sub.push_back(x);

    std::vector<std::vector<int>> orbits(n);
    for (int q = 0; q < n; ++q) {
      orbits[q] = orbit_of(d, sub, {q});
      if (!std::binary_search(orbits[q].begin(), orbits[q].end(), q))
        result.fail("state missing from its own orbit");
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        std::vector<int> common;
        std::set_intersection(orbits[p].begin(), orbits[p].end(), orbits[q].begin(),
                              orbits[q].end(), std::back_inserter(common));
        if (!common.empty() && orbits[p] != orbits[q])
          result.fail("orbits overlap without being equal");
      }

    std::vector<int> seeds;
    for (int q = 0; q < n; ++q)
      if (rng.below(2)) seeds.push_back(q);
    if (seeds.empty()) seeds.push_back(static_cast<int>(rng.below(n)));
    std::vector<int> whole = orbit_of(d, sub, seeds);
    std::vector<int> unioned;
    for (int q : seeds) unioned.insert(unioned.end(), orbits[q].begin(), orbits[q].end());
    std::sort(unioned.begin(), unioned.end());
    unioned.erase(std::unique(unioned.begin(), unioned.end()), unioned.end());
    if (whole != unioned) result.fail("set orbit differs from union of state orbits");

    for (int q = 0; q < n; ++q) {
      bool fixed_by_all = true;
      for (int x : sub)
        if (d.step(q, x) != q) fixed_by_all = false;
      if ((orbits[q].size() == 1) != fixed_by_all)
        result.fail("singleton-orbit criterion violated");
    }
  }
  return result;
}

/// For permutation DFAs, u followed by the computed power word acts as the
/// identity transformation.
inline PropertyResult identity_word_law(std::uint64_t seed, int cases) {
  PropertyResult result;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++result.cases;
    int n = rng.range(1, 8);
    Dfa d = random_permutation_dfa(rng, n, rng.range(1, 3));
    SymbolSet sub;
    for (int x = 0; x < d.symbol_count(); ++x)
      if (rng.below(2)) sub.push_back(x);
    std::vector<int> u;
    int len = rng.range(0, 6);
    for (int k = 0; k < len && !sub.empty(); ++k)
      u.push_back(sub[rng.below(sub.size())]);

    PowerWord back = identity_power_word(d, sub, u);
    StateMap round_trip = compose(word_action(d, u), power_word_action(d, back));
    if (round_trip != identity_map(n)) result.fail("u u' is not the identity");
  }
  return result;
}

/// minimize is idempotent bit-for-bit and preserves the language.
inline PropertyResult minimize_idempotence(std::uint64_t seed, int cases) {
  PropertyResult result;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++result.cases;
    Dfa d = rng.below(2) ? random_partial_dfa(rng, rng.range(1, 6), rng.range(1, 3), 0.25)
                         : random_permutation_dfa(rng, rng.range(1, 6), rng.range(1, 3));
    Dfa m = minimize(d);
    if (!(minimize(m) == m)) result.fail("minimize(minimize(d)) != minimize(d)");
    if (!equivalent(d, m).equal) result.fail("minimize changed the language");
    if (m.state_count > std::max(1, d.state_count))
      result.fail("minimize grew the automaton");
  }
  return result;
}

/// parse(serialize(d)) reproduces d, and serialization is stable.
inline PropertyResult roundtrip_property(std::uint64_t seed, int cases) {
  PropertyResult result;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++result.cases;
    Dfa d = rng.below(2) ? random_partial_dfa(rng, rng.range(1, 7), rng.range(1, 4), 0.3)
                         : random_permutation_dfa(rng, rng.range(1, 7), rng.range(1, 4));
    std::optional<SymbolSet> gamma;
    if (rng.below(2)) {
      SymbolSet g;
      for (int x = 0; x < d.symbol_count(); ++x)
        if (rng.below(2)) g.push_back(x);
      gamma = g;
    }
    std::string text = serialize_automaton(d, gamma);
    ParsedAutomaton parsed = parse_automaton(text);
    if (!(parsed.dfa == d)) result.fail("parse(serialize(d)) != d");
    if (parsed.gamma != gamma) result.fail("gamma not preserved");
    if (serialize_automaton(parsed.dfa, parsed.gamma) != text)
      result.fail("serialization is not stable");
  }
  return result;
}

}  // namespace testutil
