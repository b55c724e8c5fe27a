#include <catch2/catch_amalgamated.hpp>

#include "dfaproj/dfa.hpp"
#include "dfaproj/minimize.hpp"
#include "dfaproj/random.hpp"
#include "dfaproj/witness.hpp"
#include "generators.hpp"
#include "helpers.hpp"

using namespace dfaproj;
using testutil::word;

namespace {

// Two-state hand automaton for bb* over {b}.
Dfa bb_star() { return make_dfa(2, {"b"}, 0, {1}, {{{0, 0, 1}, {1, 0, 1}}}); }

Dfa b_star() { return make_dfa(1, {"b"}, 0, {0}, {{{0, 0, 0}}}); }

}  // namespace

TEST_CASE("run follows transitions and reports missing steps") {
  auto group = builtin("example_group").dfa;
  CHECK(run(group, 0, word(group, "ab")) == 2);

  auto comm = builtin("example_commutative").dfa;
  CHECK(run(comm, 0, word(comm, "ab")) == 2);

  for (int q = 0; q < group.state_count; ++q) CHECK(run(group, q, {}) == q);

  Dfa partial = make_dfa(2, {"a"}, 0, {1}, {{{0, 0, 1}}});
  CHECK_FALSE(run(partial, 1, word(partial, "a")).has_value());
  CHECK_THROWS_AS(run(partial, 0, {5}), input_error);
}

TEST_CASE("trim keeps exactly the reachable coaccessible part") {
  SECTION("fixed point on already trim automata") {
    Dfa d = bb_star();
    CHECK(trim(d) == d);
  }
  SECTION("unreachable final state removed") {
    Dfa d = make_dfa(3, {"a"}, 0, {0, 2}, {{{0, 0, 0}}});
    Dfa t = trim(d);
    CHECK(t.state_count == 1);
    CHECK(t.finals == std::set<int>{0});
  }
  SECTION("non-coaccessible state removed") {
    Dfa d = make_dfa(3, {"a", "b"}, 0, {2},
                     {{{0, 0, 1}, {0, 1, 2}, {1, 0, 1}, {2, 1, 2}}});
    Dfa t = trim(d);
    CHECK(t.state_count == 2);
    CHECK(equivalent(t, d).equal);
  }
  SECTION("witness automata are already trim") {
    for (auto [n, m] : {std::pair{4, 1}, {7, 2}, {8, 3}}) {
      Dfa w = make_witness({n, m}).dfa;
      CHECK(trim(w) == w);
    }
  }
  SECTION("empty language collapses to the one-state convention") {
    Dfa d = make_dfa(2, {"a"}, 0, {}, {{{0, 0, 1}}});
    Dfa t = trim(d);
    CHECK(t.state_count == 1);
    CHECK(t.finals.empty());
    CHECK(t.transitions == std::vector<int>{kUndefined});
  }
  SECTION("no-op on connected permutation automata with a final state") {
    Rng rng(20240104);
    for (int i = 0; i < 30; ++i) {
      Dfa d = testutil::random_connected_permutation_dfa(rng, rng.range(2, 7), 2);
      CHECK(trim(d) == d);
    }
  }
}

TEST_CASE("minimize produces the canonical minimal partial automaton") {
  SECTION("bb* hand automaton is already minimal") {
    CHECK(minimize(bb_star()) == bb_star());
  }
  SECTION("three states of the commutative example are pairwise distinguishable") {
    Dfa d = builtin("example_commutative").dfa;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q) CHECK(testutil::distinguishable(d, p, q, 3));
    CHECK(minimize(d).state_count == 3);
  }
  SECTION("equivalent final states are merged") {
    Dfa d = make_dfa(3, {"a"}, 0, {1, 2}, {{{0, 0, 1}, {1, 0, 2}, {2, 0, 1}}});
    Dfa m = minimize(d);
    CHECK(m.state_count == 2);
    CHECK(equivalent(m, d).equal);
  }
  SECTION("empty language minimizes to the canonical empty automaton") {
    Dfa d = make_dfa(2, {"a"}, 0, {}, {{{0, 0, 1}, {1, 0, 0}}});
    CHECK(minimize(d) == empty_language_dfa({"a"}));
  }
}

TEST_CASE("minimize is language-preserving and idempotent on random automata") {
  Rng rng(20240101);
  for (int i = 0; i < 60; ++i) {
    Dfa d = random_partial_dfa(rng, rng.range(1, 6), rng.range(1, 3), 0.2);
    Dfa m = minimize(d);
    CHECK(equivalent(d, m).equal);
    CHECK(minimize(m) == m);
  }
}

TEST_CASE("no smaller equivalent partial automaton exists") {
  // Exhaustive search below the minimal size; tiny alphabets keep the
  // enumeration feasible.
  Rng rng(20240102);
  int checked = 0;
  for (int i = 0; i < 40 && checked < 12; ++i) {
    int letters = rng.range(1, 2);
    int states = rng.range(1, letters == 1 ? 5 : 4);
    Dfa d = random_partial_dfa(rng, states, letters, 0.25);
    Dfa m = minimize(d);
    if (letters == 2 && m.state_count > 3) continue;
    ++checked;
    for (int k = 1; k < m.state_count; ++k) {
      bool found_smaller = false;
      testutil::for_each_partial_dfa(k, letters, [&](const Dfa& candidate) {
        if (equivalent(candidate, m).equal) {
          found_smaller = true;
          return false;
        }
        return true;
      });
      CHECK_FALSE(found_smaller);
    }
  }
  CHECK(checked >= 12);
}

TEST_CASE("equivalence verdicts carry genuine witnesses") {
  SECTION("minimization preserves the language") {
    Dfa d = builtin("example_group").dfa;
    CHECK(equivalent(d, minimize(d)).equal);
  }
  SECTION("bb* vs b* differ at the empty word") {
    auto verdict = equivalent(bb_star(), b_star());
    REQUIRE_FALSE(verdict.equal);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->empty());
  }
  SECTION("witness words separate the two languages") {
    Rng rng(20240103);
    int unequal = 0;
    for (int i = 0; i < 80; ++i) {
      Dfa a = random_partial_dfa(rng, rng.range(1, 5), 2, 0.2);
      Dfa b = random_partial_dfa(rng, rng.range(1, 5), 2, 0.2);
      auto verdict = equivalent(a, b);
      if (verdict.equal) continue;
      ++unequal;
      REQUIRE(verdict.witness.has_value());
      CHECK(testutil::accepts_word(a, *verdict.witness) !=
            testutil::accepts_word(b, *verdict.witness));
    }
    CHECK(unequal > 20);
  }
  SECTION("symbol sets must agree") {
    CHECK_THROWS_AS(equivalent(bb_star(), builtin("example_group").dfa), input_error);
  }
  SECTION("symbol order may differ") {
    Dfa x = make_dfa(1, {"a", "b"}, 0, {0}, {{{0, 0, 0}, {0, 1, 0}}});
    Dfa y = make_dfa(1, {"b", "a"}, 0, {0}, {{{0, 0, 0}, {0, 1, 0}}});
    CHECK(equivalent(x, y).equal);
  }
}

TEST_CASE("permutation detection") {
  CHECK(is_permutation_dfa(make_witness({6, 2}).dfa));
  CHECK_FALSE(is_permutation_dfa(builtin("example_commutative").dfa));
  CHECK(is_permutation_dfa(make_dfa(1, {"a", "b"}, 0, {0}, {{{0, 0, 0}, {0, 1, 0}}})));
  CHECK_FALSE(is_permutation_dfa(make_dfa(2, {"a"}, 0, {1}, {{{0, 0, 1}}})));
}

TEST_CASE("word actions compose letter actions in word order") {
  auto group = builtin("example_group").dfa;
  CHECK(word_action(group, {}) == identity_map(3));

  Dfa w = make_witness({5, 1}).dfa;
  auto a = word(w, "a");
  CHECK(compose(word_action(w, a), word_action(w, a)) == identity_map(5));
  CHECK(word_action(w, word(w, "aa")) == identity_map(5));

  CHECK(word_action(group, word(group, "ab")) != word_action(group, word(group, "ba")));

  // Concatenation law on random partial automata.
  Rng rng(20240105);
  for (int i = 0; i < 40; ++i) {
    Dfa d = random_partial_dfa(rng, rng.range(1, 6), 3, 0.25);
    std::vector<int> u, v;
    for (int k = rng.range(0, 4); k > 0; --k) u.push_back(static_cast<int>(rng.below(3)));
    for (int k = rng.range(0, 4); k > 0; --k) v.push_back(static_cast<int>(rng.below(3)));
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(word_action(d, uv) == compose(word_action(d, u), word_action(d, v)));
  }
}

TEST_CASE("cycle notation round trips") {
  StateMap perm = permutation_from_cycles(5, {{0, 1}, {2, 3, 4}});
  CHECK(perm == StateMap{1, 0, 3, 4, 2});
  CHECK(cycles_of(perm) == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK(permutation_order(perm) == 6);
  CHECK(cycles_of(identity_map(4)).empty());
  CHECK_THROWS_AS(permutation_from_cycles(3, {{0, 1}, {1, 2}}), input_error);
  CHECK_THROWS_AS(permutation_from_cycles(2, {{0, 5}}), input_error);
}

TEST_CASE("completion accounting") {
  // bb* over a unary alphabet is already complete.
  CHECK(completed_state_count(minimize(bb_star())) == 2);
  CHECK(completed_state_count(minimize(b_star())) == 1);
  CHECK(completed_state_count(empty_language_dfa({"a"})) == 1);
  Dfa complete = builtin("example_group").dfa;
  CHECK(completed_state_count(minimize(complete)) == minimize(complete).state_count);
  CHECK(complete_with_sink(complete) == complete);

  // The single-word language {b} is genuinely partial: completing it needs
  // a sink.
  Dfa just_b = make_dfa(2, {"b"}, 0, {1}, {{{0, 0, 1}}});
  CHECK(minimize(just_b) == just_b);
  CHECK(completed_state_count(minimize(just_b)) == 3);
  Dfa sunk = complete_with_sink(just_b);
  CHECK(sunk.state_count == 3);
  CHECK(equivalent(sunk, just_b).equal);
}

TEST_CASE("validation rejects malformed automata") {
  Dfa d = bb_star();
  d.initial = 7;
  CHECK_THROWS_AS(validate(d), input_error);
  d = bb_star();
  d.symbols = {"b", "b"};
  d.transitions.resize(4, kUndefined);
  CHECK_THROWS_AS(validate(d), input_error);
  CHECK_THROWS_AS(make_dfa(2, {"a"}, 0, {1}, {{{0, 0, 1}, {0, 0, 0}}}), input_error);
}
