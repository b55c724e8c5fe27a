#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dfaproj/errors.hpp"

namespace dfaproj {

/// A total or partial self-map of the state set: entry q is the image of q,
/// or kUndefined where the map is not defined.
using StateMap = std::vector<int>;

inline constexpr int kUndefined = -1;

/// A duplicate-free, ascending list of symbol indices.
using SymbolSet = std::vector<int>;

/// Partial deterministic finite automaton over a named alphabet.
///
/// States and symbols are dense 0-based indices. The transition table is
/// stored row-major (state * symbol_count() + symbol), with kUndefined for
/// missing transitions, so determinism holds by construction. Values are
/// treated as immutable after construction: every operation in this library
/// takes const references and returns fresh automata, so instances may be
/// shared freely across threads.
struct Dfa {
  int state_count = 0;
  std::vector<std::string> symbols;
  std::vector<int> transitions;
  int initial = 0;
  std::set<int> finals;

  int symbol_count() const { return static_cast<int>(symbols.size()); }

  int step(int state, int symbol) const {
    return transitions[static_cast<std::size_t>(state) * symbols.size() + symbol];
  }

  int& step_ref(int state, int symbol) {
    return transitions[static_cast<std::size_t>(state) * symbols.size() + symbol];
  }

  bool is_final(int state) const { return finals.count(state) != 0; }

  std::optional<int> symbol_index(std::string_view name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  bool operator==(const Dfa&) const = default;
};

/// Checks the structural invariants and throws input_error on violation.
inline void validate(const Dfa& d) {
  if (d.state_count < 1) throw input_error("automaton needs at least one state");
  for (std::size_t i = 0; i < d.symbols.size(); ++i) {
    if (d.symbols[i].empty()) throw input_error("empty symbol name");
    for (std::size_t j = i + 1; j < d.symbols.size(); ++j)
      if (d.symbols[i] == d.symbols[j])
        throw input_error("duplicate symbol name: " + d.symbols[i]);
  }
  if (d.transitions.size() !=
      static_cast<std::size_t>(d.state_count) * d.symbols.size())
    throw input_error("transition table has wrong size");
  for (int t : d.transitions)
    if (t != kUndefined && (t < 0 || t >= d.state_count))
      throw input_error("transition target out of range");
  if (d.initial < 0 || d.initial >= d.state_count)
    throw input_error("initial state out of range");
  for (int f : d.finals)
    if (f < 0 || f >= d.state_count) throw input_error("final state out of range");
}

inline Dfa make_empty_dfa(int state_count, std::vector<std::string> symbols,
                          int initial, std::vector<int> finals) {
  Dfa d;
  d.state_count = state_count;
  d.symbols = std::move(symbols);
  d.transitions.assign(static_cast<std::size_t>(state_count) * d.symbols.size(),
                       kUndefined);
  d.initial = initial;
  d.finals.insert(finals.begin(), finals.end());
  validate(d);
  return d;
}

inline void add_transition(Dfa& d, int from, int symbol, int to) {
  if (from < 0 || from >= d.state_count || to < 0 || to >= d.state_count)
    throw input_error("transition endpoint out of range");
  if (symbol < 0 || symbol >= d.symbol_count())
    throw input_error("unknown symbol index");
  int& slot = d.step_ref(from, symbol);
  if (slot != kUndefined)
    throw input_error("duplicate transition for (" + std::to_string(from) +
                      ", " + d.symbols[symbol] + ")");
  slot = to;
}

/// Convenience builder; transitions are (from, symbol, to) triples.
inline Dfa make_dfa(int state_count, std::vector<std::string> symbols,
                    int initial, std::vector<int> finals,
                    const std::vector<std::array<int, 3>>& transitions) {
  Dfa d = make_empty_dfa(state_count, std::move(symbols), initial, std::move(finals));
  for (const auto& [from, symbol, to] : transitions) add_transition(d, from, symbol, to);
  return d;
}

// ---------------------------------------------------------------------------
// State maps and letter actions

inline StateMap identity_map(int n) {
  StateMap m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

/// Applies `first`, then `then`; undefined propagates.
inline StateMap compose(const StateMap& first, const StateMap& then) {
  StateMap out(first.size(), kUndefined);
  for (std::size_t q = 0; q < first.size(); ++q)
    if (first[q] != kUndefined) out[q] = then[first[q]];
  return out;
}

inline bool is_total_bijection(const StateMap& m) {
  std::vector<char> hit(m.size(), 0);
  for (int t : m) {
    if (t == kUndefined || t < 0 || t >= static_cast<int>(m.size()) || hit[t])
      return false;
    hit[t] = 1;
  }
  return true;
}

inline StateMap inverse_permutation(const StateMap& perm) {
  StateMap inv(perm.size(), kUndefined);
  for (std::size_t q = 0; q < perm.size(); ++q) inv[perm[q]] = static_cast<int>(q);
  return inv;
}

/// The action of one letter on the whole state set.
struct LetterAction {
  int symbol = 0;
  StateMap image;
};

inline LetterAction letter_action(const Dfa& d, int symbol) {
  if (symbol < 0 || symbol >= d.symbol_count())
    throw input_error("unknown symbol index");
  LetterAction a;
  a.symbol = symbol;
  a.image.resize(d.state_count);
  for (int q = 0; q < d.state_count; ++q) a.image[q] = d.step(q, symbol);
  return a;
}

/// Composite action of a word (symbol-index sequence); the empty word acts
/// as the identity.
inline StateMap word_action(const Dfa& d, const std::vector<int>& word) {
  StateMap act = identity_map(d.state_count);
  for (int x : word) {
    if (x < 0 || x >= d.symbol_count()) throw input_error("unknown symbol index");
    act = compose(act, letter_action(d, x).image);
  }
  return act;
}

/// Runs the automaton from a state; nullopt when a step is missing.
inline std::optional<int> run(const Dfa& d, int from, const std::vector<int>& word) {
  if (from < 0 || from >= d.state_count) throw input_error("state out of range");
  int q = from;
  for (int x : word) {
    if (x < 0 || x >= d.symbol_count()) throw input_error("unknown symbol index");
    q = d.step(q, x);
    if (q == kUndefined) return std::nullopt;
  }
  return q;
}

inline bool accepts(const Dfa& d, const std::vector<int>& word) {
  auto q = run(d, d.initial, word);
  return q && d.is_final(*q);
}

/// True iff every letter acts as a total bijection on the states.
inline bool is_permutation_dfa(const Dfa& d) {
  for (int x = 0; x < d.symbol_count(); ++x)
    if (!is_total_bijection(letter_action(d, x).image)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Symbol sets

/// Normalizes a list of symbol indices into a SymbolSet (sorted, unique).
inline SymbolSet symbol_set(const Dfa& d, std::vector<int> symbols) {
  for (int x : symbols)
    if (x < 0 || x >= d.symbol_count()) throw input_error("unknown symbol index");
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return symbols;
}

inline SymbolSet symbol_set_by_name(const Dfa& d, const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& name : names) {
    auto i = d.symbol_index(name);
    if (!i) throw input_error("unknown symbol: " + name);
    idx.push_back(*i);
  }
  return symbol_set(d, std::move(idx));
}

inline SymbolSet all_symbols(const Dfa& d) {
  SymbolSet s(d.symbols.size());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

inline SymbolSet complement_symbols(const Dfa& d, const SymbolSet& sub) {
  SymbolSet out;
  for (int x = 0; x < d.symbol_count(); ++x)
    if (!std::binary_search(sub.begin(), sub.end(), x)) out.push_back(x);
  return out;
}

inline std::vector<std::string> symbol_names(const Dfa& d, const SymbolSet& sub) {
  std::vector<std::string> names;
  for (int x : sub) names.push_back(d.symbols[x]);
  return names;
}

// ---------------------------------------------------------------------------
// Permutations in cycle notation

/// Builds a permutation of {0,...,n-1} from disjoint cycles; states absent
/// from every cycle are fixed.
inline StateMap permutation_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  StateMap perm = identity_map(n);
  std::vector<char> seen(n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int q = cycle[i];
      if (q < 0 || q >= n)
        throw input_error("cycle state " + std::to_string(q) + " out of range");
      if (seen[q])
        throw input_error("state " + std::to_string(q) +
                          " appears more than once in cycle notation");
      seen[q] = 1;
      perm[q] = cycle[(i + 1) % cycle.size()];
    }
  }
  return perm;
}

/// Canonical cycle decomposition: fixed points omitted, each cycle starting
/// at its smallest element, cycles ordered by smallest element.
inline std::vector<std::vector<int>> cycles_of(const StateMap& perm) {
  if (!is_total_bijection(perm)) throw input_error("not a permutation");
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(perm.size(), 0);
  for (int q = 0; q < static_cast<int>(perm.size()); ++q) {
    if (seen[q] || perm[q] == q) continue;
    std::vector<int> cycle;
    int p = q;
    while (!seen[p]) {
      seen[p] = 1;
      cycle.push_back(p);
      p = perm[p];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

/// Order of a permutation: least common multiple of its cycle lengths.
inline std::uint64_t permutation_order(const StateMap& perm) {
  if (!is_total_bijection(perm)) throw input_error("not a permutation");
  std::uint64_t order = 1;
  std::vector<char> seen(perm.size(), 0);
  for (int q = 0; q < static_cast<int>(perm.size()); ++q) {
    if (seen[q]) continue;
    std::uint64_t len = 0;
    int p = q;
    while (!seen[p]) {
      seen[p] = 1;
      ++len;
      p = perm[p];
    }
    order = std::lcm(order, len);
  }
  return order;
}

inline void set_letter_permutation(Dfa& d, int symbol, const StateMap& perm) {
  if (!is_total_bijection(perm) || static_cast<int>(perm.size()) != d.state_count)
    throw input_error("letter action is not a permutation of the states");
  for (int q = 0; q < d.state_count; ++q) d.step_ref(q, symbol) = perm[q];
}

// ---------------------------------------------------------------------------
// Reachability

inline std::vector<int> reachable_states(const Dfa& d) {
  std::vector<char> seen(d.state_count, 0);
  std::vector<int> queue{d.initial};
  seen[d.initial] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int q = queue[i];
    for (int x = 0; x < d.symbol_count(); ++x) {
      int t = d.step(q, x);
      if (t != kUndefined && !seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

inline bool initially_connected(const Dfa& d) {
  return static_cast<int>(reachable_states(d).size()) == d.state_count;
}

}  // namespace dfaproj
