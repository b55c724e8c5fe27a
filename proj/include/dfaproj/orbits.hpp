#pragma once

#include <cstdint>
#include <vector>

#include "dfaproj/dfa.hpp"

namespace dfaproj {

/// All states reachable from `seeds` using only letters of `sub`, computed
/// as a breadth-first closure under the letter actions. Result is sorted.
inline std::vector<int> orbit_of(const Dfa& d, const SymbolSet& sub,
                                 const std::vector<int>& seeds) {
  for (int x : sub)
    if (x < 0 || x >= d.symbol_count()) throw input_error("unknown symbol index");
  std::vector<char> seen(d.state_count, 0);
  std::vector<int> queue;
  for (int q : seeds) {
    if (q < 0 || q >= d.state_count) throw input_error("state out of range");
    if (!seen[q]) {
      seen[q] = 1;
      queue.push_back(q);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int x : sub) {
      int t = d.step(queue[i], x);
      if (t != kUndefined && !seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    }
  std::vector<int> out;
  for (int q = 0; q < d.state_count; ++q)
    if (seen[q]) out.push_back(q);
  return out;
}

/// Partition of the state set into single-state orbits of a subalphabet.
/// Blocks are sorted internally and ordered by their smallest element.
struct OrbitPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;
  SymbolSet subalphabet;
};

/// Computes the orbit partition. Only permutation DFAs are accepted: for
/// other automata single-state orbits can overlap, so no partition exists
/// and callers should use orbit_of per state instead.
inline OrbitPartition orbit_partition(const Dfa& d, const SymbolSet& sub) {
  if (!is_permutation_dfa(d))
    throw mode_error("orbit_partition requires a permutation DFA; "
                     "use orbit_of per state otherwise");
  OrbitPartition part;
  part.subalphabet = symbol_set(d, sub);
  part.block_of.assign(d.state_count, -1);
  for (int q = 0; q < d.state_count; ++q) {
    if (part.block_of[q] != -1) continue;
    std::vector<int> block = orbit_of(d, part.subalphabet, {q});
    int index = static_cast<int>(part.blocks.size());
    for (int member : block) part.block_of[member] = index;
    part.blocks.push_back(std::move(block));
  }
  return part;
}

/// A word given as base^exponent, kept compressed because permutation
/// orders grow quickly with the state count.
struct PowerWord {
  std::vector<int> base;
  std::uint64_t exponent = 0;

  std::uint64_t length() const { return exponent * base.size(); }
};

/// For a permutation DFA and a word u over `sub`, returns u' = u^(k-1)
/// where k is the order of the action of u, so that u u' acts as the
/// identity on the states.
inline PowerWord identity_power_word(const Dfa& d, const SymbolSet& sub,
                                     const std::vector<int>& word) {
  if (!is_permutation_dfa(d))
    throw mode_error("identity_power_word requires a permutation DFA");
  SymbolSet s = symbol_set(d, sub);
  for (int x : word)
    if (!std::binary_search(s.begin(), s.end(), x))
      throw input_error("word uses a letter outside the subalphabet");
  StateMap act = word_action(d, word);
  std::uint64_t order = permutation_order(act);
  return {word, order - 1};
}

/// Repeated-squaring power of a total map.
inline StateMap power_of_map(const StateMap& m, std::uint64_t exponent) {
  StateMap result = identity_map(static_cast<int>(m.size()));
  StateMap base = m;
  while (exponent > 0) {
    if (exponent & 1) result = compose(result, base);
    base = compose(base, base);
    exponent >>= 1;
  }
  return result;
}

inline StateMap power_word_action(const Dfa& d, const PowerWord& w) {
  return power_of_map(word_action(d, w.base), w.exponent);
}

}  // namespace dfaproj
