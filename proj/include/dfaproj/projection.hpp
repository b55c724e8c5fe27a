#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dfaproj/dfa.hpp"
#include "dfaproj/orbits.hpp"

namespace dfaproj {

/// Observable alphabet plus the derived unobservability statistics: the
/// states incident to non-loop transitions of the erased letters, and their
/// count m. Multiple transitions between the same states count once and
/// direction is ignored.
struct ProjectionSpec {
  SymbolSet gamma;
  SymbolSet delta_letters;
  std::vector<int> incident_states;
  int m = 0;
  std::vector<int> quiet_states;
};

inline ProjectionSpec unobservability_stats(const Dfa& d, const SymbolSet& gamma) {
  ProjectionSpec spec;
  spec.gamma = symbol_set(d, gamma);
  spec.delta_letters = complement_symbols(d, spec.gamma);
  std::vector<char> incident(d.state_count, 0);
  for (int q = 0; q < d.state_count; ++q)
    for (int x : spec.delta_letters) {
      int t = d.step(q, x);
      if (t != kUndefined && t != q) {
        incident[q] = 1;
        incident[t] = 1;
      }
    }
  for (int q = 0; q < d.state_count; ++q)
    (incident[q] ? spec.incident_states : spec.quiet_states).push_back(q);
  spec.m = static_cast<int>(spec.incident_states.size());
  return spec;
}

/// Projection automaton over the observable alphabet. Each state carries its
/// label: the sorted subset of source states it stands for. An empty label
/// marks the dead sink that partial non-permutation inputs can reach; it is
/// never final.
struct SubsetDfa {
  Dfa dfa;
  std::vector<std::vector<int>> labels;
};

/// Builds the reachable part of the projection automaton for gamma: the
/// start state is the erased-letter orbit of the initial state, and each
/// observable letter first steps the subset and then closes it under
/// erased-letter orbits again. Recognizes the projection of L(d) onto the
/// gamma letters.
inline SubsetDfa project(const Dfa& d, const SymbolSet& gamma0) {
  SymbolSet gamma = symbol_set(d, gamma0);
  SymbolSet delta = complement_symbols(d, gamma);

  SubsetDfa out;
  out.dfa.symbols = symbol_names(d, gamma);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> trans_rows;

  auto intern = [&](std::vector<int> label) {
    auto [it, fresh] = index.try_emplace(std::move(label), static_cast<int>(out.labels.size()));
    if (fresh) {
      out.labels.push_back(it->first);
      trans_rows.emplace_back(gamma.size(), kUndefined);
    }
    return it->second;
  };

  int start = intern(orbit_of(d, delta, {d.initial}));
  for (int s = 0; s < static_cast<int>(out.labels.size()); ++s) {
    for (std::size_t xi = 0; xi < gamma.size(); ++xi) {
      std::vector<int> stepped;
      for (int q : out.labels[s]) {
        int t = d.step(q, gamma[xi]);
        if (t != kUndefined) stepped.push_back(t);
      }
      std::sort(stepped.begin(), stepped.end());
      stepped.erase(std::unique(stepped.begin(), stepped.end()), stepped.end());
      if (!stepped.empty()) stepped = orbit_of(d, delta, stepped);
      trans_rows[s][xi] = intern(std::move(stepped));
    }
  }

  out.dfa.state_count = static_cast<int>(out.labels.size());
  out.dfa.initial = start;
  out.dfa.transitions.assign(
      static_cast<std::size_t>(out.dfa.state_count) * gamma.size(), kUndefined);
  for (int s = 0; s < out.dfa.state_count; ++s)
    for (std::size_t xi = 0; xi < gamma.size(); ++xi)
      out.dfa.step_ref(s, static_cast<int>(xi)) = trans_rows[s][xi];
  for (int s = 0; s < out.dfa.state_count; ++s)
    for (int q : out.labels[s])
      if (d.is_final(q)) {
        out.dfa.finals.insert(s);
        break;
      }
  return out;
}

/// Reference pipeline for cross-checking project(): relabel every erased
/// transition as an epsilon edge, take epsilon closures, and run the
/// textbook subset construction. Deliberately shares no closure code with
/// project().
inline Dfa project_oracle(const Dfa& d, const SymbolSet& gamma0) {
  SymbolSet gamma = symbol_set(d, gamma0);
  SymbolSet delta = complement_symbols(d, gamma);

  // eps_edges[q] lists the targets of the epsilon edges leaving q.
  std::vector<std::vector<int>> eps_edges(d.state_count);
  for (int q = 0; q < d.state_count; ++q)
    for (int x : delta) {
      int t = d.step(q, x);
      if (t != kUndefined) eps_edges[q].push_back(t);
    }

  auto eps_close = [&](std::vector<char>& member) {
    std::vector<int> stack;
    for (int q = 0; q < d.state_count; ++q)
      if (member[q]) stack.push_back(q);
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (int t : eps_edges[q])
        if (!member[t]) {
          member[t] = 1;
          stack.push_back(t);
        }
    }
  };
  auto key_of = [&](const std::vector<char>& member) {
    std::vector<int> key;
    for (int q = 0; q < d.state_count; ++q)
      if (member[q]) key.push_back(q);
    return key;
  };

  std::vector<char> start_mask(d.state_count, 0);
  start_mask[d.initial] = 1;
  eps_close(start_mask);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<int>> trans_rows;
  auto intern = [&](std::vector<int> key) {
    auto [it, fresh] = index.try_emplace(std::move(key), static_cast<int>(subsets.size()));
    if (fresh) {
      subsets.push_back(it->first);
      trans_rows.emplace_back(gamma.size(), kUndefined);
    }
    return it->second;
  };

  int start = intern(key_of(start_mask));
  for (int s = 0; s < static_cast<int>(subsets.size()); ++s) {
    for (std::size_t xi = 0; xi < gamma.size(); ++xi) {
      std::vector<char> next(d.state_count, 0);
      for (int q : subsets[s]) {
        int t = d.step(q, gamma[xi]);
        if (t != kUndefined) next[t] = 1;
      }
      eps_close(next);
      trans_rows[s][xi] = intern(key_of(next));
    }
  }

  Dfa out = make_empty_dfa(static_cast<int>(subsets.size()), symbol_names(d, gamma),
                           start, {});
  for (int s = 0; s < out.state_count; ++s) {
    for (std::size_t xi = 0; xi < gamma.size(); ++xi)
      out.step_ref(s, static_cast<int>(xi)) = trans_rows[s][xi];
    for (int q : subsets[s])
      if (d.is_final(q)) {
        out.finals.insert(s);
        break;
      }
  }
  return out;
}

/// Outcome of the state-partition test. Disjointness and coverage are
/// reported separately; offending_pair holds two reachable subset labels
/// with a non-empty intersection whenever disjoint is false.
struct StatePartitionVerdict {
  bool disjoint = true;
  bool covers_all_states = true;
  bool is_state_partition = true;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> offending_pair;
};

/// Tests whether the reachable non-empty subset labels of the projection
/// automaton partition the state set. Requires an initially connected input;
/// trim first if needed.
inline StatePartitionVerdict check_state_partition(const Dfa& d, const SymbolSet& gamma) {
  if (!initially_connected(d))
    throw precondition_error("check_state_partition requires an initially "
                             "connected automaton; trim first");
  SubsetDfa proj = project(d, gamma);

  std::vector<const std::vector<int>*> labels;
  for (const auto& label : proj.labels)
    if (!label.empty()) labels.push_back(&label);

  StatePartitionVerdict verdict;
  std::vector<int> cover_count(d.state_count, 0);
  for (const auto* label : labels)
    for (int q : *label) ++cover_count[q];

  verdict.covers_all_states =
      std::find(cover_count.begin(), cover_count.end(), 0) == cover_count.end();
  verdict.disjoint =
      std::find_if(cover_count.begin(), cover_count.end(),
                   [](int c) { return c > 1; }) == cover_count.end();
  if (!verdict.disjoint) {
    for (std::size_t i = 0; i < labels.size() && !verdict.offending_pair; ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        std::vector<int> common;
        std::set_intersection(labels[i]->begin(), labels[i]->end(),
                              labels[j]->begin(), labels[j]->end(),
                              std::back_inserter(common));
        if (!common.empty()) {
          verdict.offending_pair = {*labels[i], *labels[j]};
          break;
        }
      }
  }
  verdict.is_state_partition = verdict.disjoint && verdict.covers_all_states;
  return verdict;
}

}  // namespace dfaproj
