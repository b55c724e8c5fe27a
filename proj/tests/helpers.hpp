#pragma once

// Shared test utilities: small oracles and word helpers kept independent of
// the library code they check.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dfaproj/dfa.hpp"
#include "dfaproj/random.hpp"

namespace testutil {

using dfaproj::Dfa;

/// Word from single-character symbol names, e.g. "ab".
inline std::vector<int> word(const Dfa& d, std::string_view letters) {
  std::vector<int> w;
  for (char c : letters) {
    auto idx = d.symbol_index(std::string(1, c));
    if (!idx) throw std::runtime_error("unknown letter in test word");
    w.push_back(*idx);
  }
  return w;
}

/// All words over the automaton's alphabet up to the given length.
inline std::vector<std::vector<int>> words_up_to(int symbols, int max_len) {
  std::vector<std::vector<int>> out{{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i)
      for (int x = 0; x < symbols; ++x) {
        auto w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    level_start = level_end;
  }
  return out;
}

/// Membership by direct simulation.
inline bool accepts_word(const Dfa& d, const std::vector<int>& w) {
  int q = d.initial;
  for (int x : w) {
    q = d.step(q, x);
    if (q == dfaproj::kUndefined) return false;
  }
  return d.is_final(q);
}

/// Brute-force distinguishability of two states: some word up to max_len
/// leads exactly one of them to a defined final state.
inline bool distinguishable(const Dfa& d, int p, int q, int max_len) {
  for (const auto& w : words_up_to(d.symbol_count(), max_len)) {
    auto rp = dfaproj::run(d, p, w);
    auto rq = dfaproj::run(d, q, w);
    bool fp = rp && d.is_final(*rp);
    bool fq = rq && d.is_final(*rq);
    if (fp != fq) return true;
  }
  return false;
}

/// Enumerates every partial DFA with the given number of states and letters
/// (all transition tables, all initial states, all final sets) and feeds each
/// to the callback until it returns false. Exponential; tiny sizes only.
inline void for_each_partial_dfa(int states, int letters,
                                 const std::function<bool(const Dfa&)>& visit) {
  const int cells = states * letters;
  std::vector<int> table(cells, -1);  // -1 undefined, else target
  for (;;) {
    for (int initial = 0; initial < states; ++initial)
      for (unsigned finals = 0; finals < (1u << states); ++finals) {
        Dfa d = dfaproj::make_empty_dfa(states, dfaproj::default_symbol_names(letters),
                                        initial, {});
        for (int q = 0; q < states; ++q)
          for (int x = 0; x < letters; ++x)
            if (table[q * letters + x] >= 0) d.step_ref(q, x) = table[q * letters + x];
        for (int q = 0; q < states; ++q)
          if (finals & (1u << q)) d.finals.insert(q);
        if (!visit(d)) return;
      }
    int i = cells - 1;
    while (i >= 0 && table[i] == states - 1) table[i--] = -1;
    if (i < 0) return;
    ++table[i];
  }
}

}  // namespace testutil
