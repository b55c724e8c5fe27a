#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dfaproj/dfa.hpp"
#include "dfaproj/orbits.hpp"

namespace dfaproj {

/// True iff the two letters commute: stepping a then b equals stepping b
/// then a from every state, with undefined compared as undefined.
inline bool letters_commute(const Dfa& d, int a, int b) {
  if (a < 0 || a >= d.symbol_count() || b < 0 || b >= d.symbol_count())
    throw input_error("unknown symbol index");
  for (int q = 0; q < d.state_count; ++q) {
    int qa = d.step(q, a);
    int qb = d.step(q, b);
    int ab = qa == kUndefined ? kUndefined : d.step(qa, b);
    int ba = qb == kUndefined ? kUndefined : d.step(qb, a);
    if (ab != ba) return false;
  }
  return true;
}

inline bool is_commutative_dfa(const Dfa& d) {
  for (int a = 0; a < d.symbol_count(); ++a)
    for (int b = a + 1; b < d.symbol_count(); ++b)
      if (!letters_commute(d, a, b)) return false;
  return true;
}

struct StateMapHash {
  std::size_t operator()(const StateMap& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : m) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Deduplicated set of total state maps closed under composition with its
/// generators (unless truncated by the element cap). Always contains the
/// identity map; for permutation generators the set is a group and closed
/// under inverses.
struct TransformationSet {
  std::vector<StateMap> elements;
  SymbolSet generators;
  bool truncated = false;
  std::unordered_set<StateMap, StateMapHash> element_index;

  bool contains(const StateMap& m) const { return element_index.count(m) != 0; }
  std::size_t size() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultSubgroupCap = 1'000'000;

/// Breadth-first closure of {identity} and the chosen letter actions under
/// composition. Stops with truncated=true instead of exceeding the cap.
inline TransformationSet generate_subgroup(const Dfa& d, const SymbolSet& generators,
                                           std::size_t cap = kDefaultSubgroupCap) {
  if (!is_permutation_dfa(d))
    throw mode_error("generate_subgroup requires a permutation DFA");
  TransformationSet set;
  set.generators = symbol_set(d, generators);

  std::vector<StateMap> gen_actions;
  for (int x : set.generators) gen_actions.push_back(letter_action(d, x).image);

  auto push = [&](StateMap m) {
    if (set.contains(m)) return true;
    if (set.elements.size() >= cap) {
      set.truncated = true;
      return false;
    }
    set.element_index.insert(m);
    set.elements.push_back(std::move(m));
    return true;
  };

  push(identity_map(d.state_count));
  for (std::size_t i = 0; i < set.elements.size() && !set.truncated; ++i) {
    StateMap current = set.elements[i];
    for (const StateMap& g : gen_actions) {
      if (!push(compose(current, g))) break;
    }
  }
  return set;
}

enum class Normality { normal, not_normal, inconclusive_cap_exceeded };

/// Tests whether the subgroup generated by the `delta` letters is normal in
/// the transformation group: closure under conjugation with every letter
/// action. Never reports a silent answer when the cap was hit.
inline Normality is_normal_subgroup(const Dfa& d, const SymbolSet& delta,
                                    std::size_t cap = kDefaultSubgroupCap) {
  TransformationSet n = generate_subgroup(d, delta, cap);
  if (n.truncated) return Normality::inconclusive_cap_exceeded;
  for (int x = 0; x < d.symbol_count(); ++x) {
    StateMap g = letter_action(d, x).image;
    StateMap g_inv = inverse_permutation(g);
    for (const StateMap& h : n.elements) {
      // Conjugate acting as: apply g^-1, then h, then g.
      if (!n.contains(compose(compose(g_inv, h), g))) return Normality::not_normal;
    }
  }
  return Normality::normal;
}

/// True iff every letter maps every delta-orbit onto the delta-orbit of the
/// stepped state, i.e. the orbits are permuted by the whole alphabet.
inline bool orbits_are_permuted(const Dfa& d, const SymbolSet& delta0) {
  SymbolSet delta = symbol_set(d, delta0);
  std::vector<std::vector<int>> orbit(d.state_count);
  for (int q = 0; q < d.state_count; ++q) orbit[q] = orbit_of(d, delta, {q});

  for (int q = 0; q < d.state_count; ++q)
    for (int x = 0; x < d.symbol_count(); ++x) {
      std::vector<int> stepped;
      for (int p : orbit[q]) {
        int t = d.step(p, x);
        if (t != kUndefined) stepped.push_back(t);
      }
      std::sort(stepped.begin(), stepped.end());
      stepped.erase(std::unique(stepped.begin(), stepped.end()), stepped.end());
      int t = d.step(q, x);
      const std::vector<int> empty;
      const std::vector<int>& expected = t == kUndefined ? empty : orbit[t];
      if (stepped != expected) return false;
    }
  return true;
}

}  // namespace dfaproj
