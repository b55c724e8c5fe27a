#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "dfaproj/algebra.hpp"
#include "dfaproj/dfa.hpp"
#include "dfaproj/minimize.hpp"

namespace dfaproj {

/// Verdict on whether every erased letter commutes with every kept letter.
/// When invalid, offending_triple is (erased letter, kept letter, state) with
/// differing two-step results.
struct CentralizerSplit {
  SymbolSet gamma;
  bool valid = true;
  std::optional<std::tuple<int, int, int>> offending_triple;
};

inline CentralizerSplit split_commutes(const Dfa& d, const SymbolSet& gamma0) {
  CentralizerSplit split;
  split.gamma = symbol_set(d, gamma0);
  SymbolSet delta = complement_symbols(d, split.gamma);
  for (int a : delta)
    for (int b : split.gamma)
      for (int q = 0; q < d.state_count; ++q) {
        int qa = d.step(q, a);
        int qb = d.step(q, b);
        int ab = qa == kUndefined ? kUndefined : d.step(qa, b);
        int ba = qb == kUndefined ? kUndefined : d.step(qb, a);
        if (ab != ba) {
          split.valid = false;
          split.offending_triple = {a, b, q};
          return split;
        }
      }
  return split;
}

/// Commuting-letters projection: keep all states, drop the erased letters'
/// transitions, and accept in every state from which a final state is
/// reachable by erased letters alone (backward closure over the reversed
/// erased-letter edges). The result has exactly state_count states and
/// recognizes the projection of L(d).
inline Dfa project_commuting(const Dfa& d, const SymbolSet& gamma0) {
  CentralizerSplit split = split_commutes(d, gamma0);
  if (!split.valid) {
    auto [a, b, q] = *split.offending_triple;
    throw precondition_error("letters do not commute across the split: delta letter '" +
                             d.symbols[a] + "', gamma letter '" + d.symbols[b] +
                             "', state " + std::to_string(q));
  }
  SymbolSet delta = complement_symbols(d, split.gamma);

  std::vector<std::vector<int>> reverse_delta(d.state_count);
  for (int q = 0; q < d.state_count; ++q)
    for (int x : delta) {
      int t = d.step(q, x);
      if (t != kUndefined) reverse_delta[t].push_back(q);
    }
  std::vector<char> accepting(d.state_count, 0);
  std::vector<int> queue;
  for (int f : d.finals) {
    accepting[f] = 1;
    queue.push_back(f);
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int p : reverse_delta[queue[i]])
      if (!accepting[p]) {
        accepting[p] = 1;
        queue.push_back(p);
      }

  Dfa out = make_empty_dfa(d.state_count, symbol_names(d, split.gamma), d.initial, {});
  for (int q = 0; q < d.state_count; ++q) {
    for (std::size_t xi = 0; xi < split.gamma.size(); ++xi)
      out.step_ref(q, static_cast<int>(xi)) = d.step(q, split.gamma[xi]);
    if (accepting[q]) out.finals.insert(q);
  }
  return out;
}

/// Projection for automata whose LANGUAGE is commutative: minimize first
/// (after which all letters commute pairwise), then apply project_commuting.
/// The result has at most as many states as the minimal automaton.
inline Dfa project_commutative_language(const Dfa& d, const SymbolSet& gamma0) {
  SymbolSet gamma = symbol_set(d, gamma0);
  Dfa minimal = minimize(d);
  if (!is_commutative_dfa(minimal))
    throw precondition_error("language not commutative");
  return project_commuting(minimal, gamma);
}

}  // namespace dfaproj
