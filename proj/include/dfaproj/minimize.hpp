#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "dfaproj/dfa.hpp"

namespace dfaproj {

/// The canonical automaton for the empty language: one non-final state,
/// no transitions.
inline Dfa empty_language_dfa(std::vector<std::string> symbols) {
  return make_empty_dfa(1, std::move(symbols), 0, {});
}

/// Restricts d to states that are both reachable from the initial state and
/// coaccessible (some final state reachable from them). Kept states retain
/// their relative order. An empty language yields empty_language_dfa.
inline Dfa trim(const Dfa& d) {
  std::vector<char> reach(d.state_count, 0);
  {
    std::vector<int> queue{d.initial};
    reach[d.initial] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int x = 0; x < d.symbol_count(); ++x) {
        int t = d.step(queue[i], x);
        if (t != kUndefined && !reach[t]) {
          reach[t] = 1;
          queue.push_back(t);
        }
      }
  }
  std::vector<char> coacc(d.state_count, 0);
  {
    std::vector<std::vector<int>> rev(d.state_count);
    for (int q = 0; q < d.state_count; ++q)
      for (int x = 0; x < d.symbol_count(); ++x) {
        int t = d.step(q, x);
        if (t != kUndefined) rev[t].push_back(q);
      }
    std::vector<int> queue;
    for (int f : d.finals) {
      coacc[f] = 1;
      queue.push_back(f);
    }
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int p : rev[queue[i]])
        if (!coacc[p]) {
          coacc[p] = 1;
          queue.push_back(p);
        }
  }

  std::vector<int> renumber(d.state_count, kUndefined);
  int kept = 0;
  for (int q = 0; q < d.state_count; ++q)
    if (reach[q] && coacc[q]) renumber[q] = kept++;
  if (renumber[d.initial] == kUndefined) return empty_language_dfa(d.symbols);

  Dfa out = make_empty_dfa(kept, d.symbols, renumber[d.initial], {});
  for (int q = 0; q < d.state_count; ++q) {
    if (renumber[q] == kUndefined) continue;
    for (int x = 0; x < d.symbol_count(); ++x) {
      int t = d.step(q, x);
      if (t != kUndefined && renumber[t] != kUndefined)
        out.step_ref(renumber[q], x) = renumber[t];
    }
    if (d.is_final(q)) out.finals.insert(renumber[q]);
  }
  return out;
}

/// Minimal partial DFA for L(d): trim, then Moore partition refinement,
/// then canonical renumbering (breadth-first from the initial state with
/// symbols in declared order). Isomorphic minimal automata compare equal.
inline Dfa minimize(const Dfa& d0) {
  Dfa d = trim(d0);
  if (d.finals.empty()) return d;

  // Undefined targets form their own stable pseudo-class.
  std::vector<int> cls(d.state_count);
  for (int q = 0; q < d.state_count; ++q) cls[q] = d.is_final(q) ? 1 : 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_index;
    std::vector<int> next(d.state_count);
    for (int q = 0; q < d.state_count; ++q) {
      std::vector<int> sig{cls[q]};
      for (int x = 0; x < d.symbol_count(); ++x) {
        int t = d.step(q, x);
        sig.push_back(t == kUndefined ? -1 : cls[t]);
      }
      auto [it, _] = sig_index.try_emplace(sig, static_cast<int>(sig_index.size()));
      next[q] = it->second;
    }
    if (next == cls) break;
    cls = std::move(next);
  }

  std::vector<int> rep(d.state_count, kUndefined);
  for (int q = 0; q < d.state_count; ++q)
    if (rep[cls[q]] == kUndefined) rep[cls[q]] = q;

  std::vector<int> number(d.state_count, kUndefined);
  std::vector<int> order{cls[d.initial]};
  number[cls[d.initial]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int x = 0; x < d.symbol_count(); ++x) {
      int t = d.step(rep[order[i]], x);
      if (t == kUndefined) continue;
      if (number[cls[t]] == kUndefined) {
        number[cls[t]] = static_cast<int>(order.size());
        order.push_back(cls[t]);
      }
    }

  Dfa out = make_empty_dfa(static_cast<int>(order.size()), d.symbols, 0, {});
  for (std::size_t i = 0; i < order.size(); ++i) {
    int q = rep[order[i]];
    for (int x = 0; x < d.symbol_count(); ++x) {
      int t = d.step(q, x);
      if (t != kUndefined) out.step_ref(static_cast<int>(i), x) = number[cls[t]];
    }
    if (d.is_final(q)) out.finals.insert(static_cast<int>(i));
  }
  return out;
}

/// Number of states of the minimal complete DFA, given the minimal partial
/// automaton: the empty language needs one (sink) state; otherwise a fresh
/// sink is added exactly when some transition is undefined.
inline int completed_state_count(const Dfa& minimal) {
  if (minimal.finals.empty()) return 1;
  bool partial = std::find(minimal.transitions.begin(), minimal.transitions.end(),
                           kUndefined) != minimal.transitions.end();
  return minimal.state_count + (partial ? 1 : 0);
}

/// Adds a fresh non-final sink absorbing all missing transitions; returns a
/// copy unchanged when the automaton is already complete.
inline Dfa complete_with_sink(const Dfa& d) {
  if (std::find(d.transitions.begin(), d.transitions.end(), kUndefined) ==
      d.transitions.end())
    return d;
  Dfa out = d;
  int sink = out.state_count++;
  out.transitions.resize(static_cast<std::size_t>(out.state_count) * out.symbols.size(),
                         kUndefined);
  for (int& t : out.transitions)
    if (t == kUndefined) t = sink;
  return out;
}

/// Result of a language-equivalence test. On inequality, witness holds a
/// shortest word (symbol indices of the FIRST automaton) accepted by exactly
/// one of the two.
struct EquivalenceVerdict {
  bool equal = true;
  std::optional<std::vector<int>> witness;
};

/// Decides L(a) = L(b) by breadth-first search over the product of the
/// sink-completed automata. Symbol sets must agree as sets of names; order
/// may differ.
inline EquivalenceVerdict equivalent(const Dfa& a, const Dfa& b) {
  if (a.symbols.size() != b.symbols.size())
    throw input_error("symbol sets differ");
  std::vector<int> to_b(a.symbols.size());
  for (std::size_t i = 0; i < a.symbols.size(); ++i) {
    auto j = b.symbol_index(a.symbols[i]);
    if (!j) throw input_error("symbol sets differ: " + a.symbols[i]);
    to_b[i] = *j;
  }

  Dfa ca = complete_with_sink(a);
  Dfa cb = complete_with_sink(b);
  const int nb = cb.state_count;
  std::vector<char> seen(static_cast<std::size_t>(ca.state_count) * nb, 0);
  std::vector<std::pair<int, int>> parent(seen.size(), {-1, -1});
  std::vector<int> queue;

  auto pair_id = [nb](int p, int q) { return p * nb + q; };
  int start = pair_id(ca.initial, cb.initial);
  seen[start] = 1;
  queue.push_back(start);

  for (std::size_t i = 0; i < queue.size(); ++i) {
    int id = queue[i];
    int p = id / nb, q = id % nb;
    if (ca.is_final(p) != cb.is_final(q)) {
      std::vector<int> word;
      for (int cur = id; cur != start; cur = parent[cur].first)
        word.push_back(parent[cur].second);
      std::reverse(word.begin(), word.end());
      return {false, std::move(word)};
    }
    for (int x = 0; x < ca.symbol_count(); ++x) {
      int nid = pair_id(ca.step(p, x), cb.step(q, to_b[x]));
      if (!seen[nid]) {
        seen[nid] = 1;
        parent[nid] = {id, x};
        queue.push_back(nid);
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace dfaproj
