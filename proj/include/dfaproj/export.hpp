#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfaproj/dfa.hpp"
#include "dfaproj/projection.hpp"

namespace dfaproj {

inline std::string format_subset(const std::vector<int>& subset) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? "," : "") << subset[i];
  out << "}";
  return out.str();
}

/// Graphviz export. Projection states are labeled with their source-state
/// subsets; parallel edges are merged with comma-joined symbol labels.
inline std::string to_dot(const Dfa& d,
                          const std::vector<std::vector<int>>* labels = nullptr,
                          const std::string& name = "automaton") {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (int q = 0; q < d.state_count; ++q) {
    out << "  " << q << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle");
    if (labels) out << ", label=\"" << format_subset((*labels)[q]) << "\"";
    out << "];\n";
  }
  out << "  __start -> " << d.initial << ";\n";
  std::map<std::pair<int, int>, std::string> edges;
  for (int q = 0; q < d.state_count; ++q)
    for (int x = 0; x < d.symbol_count(); ++x) {
      int t = d.step(q, x);
      if (t == kUndefined) continue;
      std::string& label = edges[{q, t}];
      if (!label.empty()) label += ",";
      label += d.symbols[x];
    }
  for (const auto& [edge, label] : edges)
    out << "  " << edge.first << " -> " << edge.second << " [label=\"" << label
        << "\"];\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const SubsetDfa& sd, const std::string& name = "projection") {
  return to_dot(sd.dfa, &sd.labels, name);
}

/// JSON export following docs/automaton.schema.json. For projection automata
/// `labels` holds the full subset label of every state, index-aligned.
inline nlohmann::json to_json(const Dfa& d,
                              const std::vector<std::vector<int>>* labels = nullptr,
                              const std::optional<std::vector<std::string>>& gamma =
                                  std::nullopt) {
  nlohmann::json doc;
  doc["kind"] = labels ? "projection" : "dfa";
  doc["symbols"] = d.symbols;
  doc["state_count"] = d.state_count;
  doc["initial"] = d.initial;
  doc["finals"] = std::vector<int>(d.finals.begin(), d.finals.end());
  nlohmann::json trans = nlohmann::json::array();
  for (int q = 0; q < d.state_count; ++q)
    for (int x = 0; x < d.symbol_count(); ++x) {
      int t = d.step(q, x);
      if (t == kUndefined) continue;
      trans.push_back({{"from", q}, {"symbol", d.symbols[x]}, {"to", t}});
    }
  doc["transitions"] = std::move(trans);
  if (labels) doc["labels"] = *labels;
  if (gamma) doc["gamma"] = *gamma;
  return doc;
}

inline nlohmann::json to_json(const SubsetDfa& sd) {
  return to_json(sd.dfa, &sd.labels, sd.dfa.symbols);
}

}  // namespace dfaproj
