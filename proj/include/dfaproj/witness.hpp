#pragma once

#include <string>
#include <vector>

#include "dfaproj/dfa.hpp"

namespace dfaproj {

/// Parameters of the lower-bound witness family: n states in total, m
/// two-element erased-letter orbits. Valid iff 0 < 2m + 1 < n.
struct WitnessParams {
  int n = 4;
  int m = 1;
};

/// An automaton together with its intended observable alphabet.
struct AutomatonFixture {
  Dfa dfa;
  SymbolSet gamma;
};

/// Builds the seven-letter witness automaton over states {0,...,n-1}
/// (conventionally presented 1-based; index i is state i+1 in that
/// numbering):
///
///   a = (0,1)(2,3)...(2m-2,2m-1)        erased letter
///   b = (2m,2m+1)                        c = (2m,2m+1,...,n-1)
///   d = (0,2)(1,3)                       e = (0,2,...,2m-2)(1,3,...,2m-1)
///   f = (0,n-1)                          g = (0,n-1)(1,n-2)
///
/// with initial and single final state n-1 and gamma = {b,...,g}. At m = 1
/// there is only one two-element a-orbit for d and e to permute, so both act
/// as the identity.
inline AutomatonFixture make_witness(const WitnessParams& p) {
  if (p.m < 1 || 2 * p.m + 1 >= p.n)
    throw parameter_error("witness parameters must satisfy 0 < 2m + 1 < n");
  const int n = p.n, m = p.m;

  Dfa d = make_empty_dfa(n, {"a", "b", "c", "d", "e", "f", "g"}, n - 1, {n - 1});

  std::vector<std::vector<int>> a_cycles;
  for (int i = 0; i < m; ++i) a_cycles.push_back({2 * i, 2 * i + 1});
  set_letter_permutation(d, 0, permutation_from_cycles(n, a_cycles));

  set_letter_permutation(d, 1, permutation_from_cycles(n, {{2 * m, 2 * m + 1}}));

  std::vector<int> c_cycle;
  for (int q = 2 * m; q < n; ++q) c_cycle.push_back(q);
  set_letter_permutation(d, 2, permutation_from_cycles(n, {c_cycle}));

  if (m >= 2) {
    set_letter_permutation(d, 3, permutation_from_cycles(n, {{0, 2}, {1, 3}}));
    std::vector<int> e_even, e_odd;
    for (int i = 0; i < m; ++i) {
      e_even.push_back(2 * i);
      e_odd.push_back(2 * i + 1);
    }
    set_letter_permutation(d, 4, permutation_from_cycles(n, {e_even, e_odd}));
  } else {
    set_letter_permutation(d, 3, identity_map(n));
    set_letter_permutation(d, 4, identity_map(n));
  }

  set_letter_permutation(d, 5, permutation_from_cycles(n, {{0, n - 1}}));
  set_letter_permutation(d, 6, permutation_from_cycles(n, {{0, n - 1}, {1, n - 2}}));

  return {std::move(d), {1, 2, 3, 4, 5, 6}};
}

/// Built-in fixture automata used throughout the test corpus, each with its
/// customary observable alphabet.
inline AutomatonFixture builtin(const std::string& name) {
  if (name == "example_commutative") {
    // States 0,1,2; a: 0->1 and otherwise fixed; b: sends everything to 2.
    Dfa d = make_dfa(3, {"a", "b"}, 0, {0, 2},
                     {{{0, 0, 1}, {1, 0, 1}, {2, 0, 2},
                       {0, 1, 2}, {1, 1, 2}, {2, 1, 2}}});
    return {std::move(d), {0}};
  }
  if (name == "example_group") {
    Dfa d = make_empty_dfa(3, {"a", "b"}, 0, {2});
    set_letter_permutation(d, 0, permutation_from_cycles(3, {{0, 1}}));
    set_letter_permutation(d, 1, permutation_from_cycles(3, {{0, 1, 2}}));
    return {std::move(d), {1}};
  }
  if (name == "remark_state_partition") {
    Dfa d = make_empty_dfa(8, {"a", "b"}, 0, {0});
    set_letter_permutation(d, 0,
                           permutation_from_cycles(8, {{0, 1, 2, 3}, {4, 5}, {6, 7}}));
    set_letter_permutation(
        d, 1, permutation_from_cycles(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}));
    return {std::move(d), {1}};
  }
  throw input_error("unknown builtin automaton: " + name);
}

}  // namespace dfaproj
