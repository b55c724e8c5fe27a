#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dfaproj/dfa.hpp"

namespace dfaproj {

/// Result of parsing an automaton document: the automaton plus the optional
/// default observable alphabet from a `gamma:` line.
struct ParsedAutomaton {
  Dfa dfa;
  std::optional<SymbolSet> gamma;
};

namespace detail {

struct DocumentState {
  int state_count = -1;
  std::vector<std::string> symbols;
  bool have_alphabet = false;
  std::optional<int> initial;
  std::vector<int> finals;
  std::optional<std::vector<std::string>> gamma_names;
  std::vector<std::array<int, 4>> trans;  // from, symbol, to, line
  // symbol -> 0 unused, 1 trans, 2 perm
  std::vector<int> symbol_kind;
  std::vector<StateMap> perm_of_symbol;

  std::unordered_map<std::string, int> label_index;
  bool used_int_states = false;
  bool used_labels = false;

  int resolve_state(const std::string& token, int line) {
    if (state_count < 0)
      throw parse_error(line, "state reference before the states: directive");
    if (token.size() >= 2 && token.front() == '[' && token.back() == ']') {
      std::string label = token.substr(1, token.size() - 2);
      if (label.empty()) throw parse_error(line, "empty state label");
      if (used_int_states)
        throw parse_error(line, "cannot mix numeric states and bracketed labels");
      used_labels = true;
      auto it = label_index.find(label);
      if (it != label_index.end()) return it->second;
      int index = static_cast<int>(label_index.size());
      if (index >= state_count)
        throw parse_error(line, "more state labels than declared states");
      label_index.emplace(std::move(label), index);
      return index;
    }
    for (char c : token)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw parse_error(line, "bad state token: " + token);
    if (used_labels)
      throw parse_error(line, "cannot mix numeric states and bracketed labels");
    used_int_states = true;
    int value = std::stoi(token);
    if (value >= state_count)
      throw parse_error(line, "state " + token + " out of range");
    return value;
  }

  int resolve_symbol(const std::string& name, int line) {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == name) return static_cast<int>(i);
    throw parse_error(line, "unknown symbol: " + name);
  }
};

inline std::vector<std::vector<int>> parse_cycles(DocumentState& doc,
                                                  const std::string& text, int line) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error(line, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != ')' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i) throw parse_error(line, "empty state in cycle notation");
      cycle.push_back(doc.resolve_state(text.substr(start, i - start), line));
      skip_space();
      if (i >= text.size()) throw parse_error(line, "unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw parse_error(line, "expected ',' or ')' in cycle notation");
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

}  // namespace detail

/// Parses the automaton text format. Directives: `states:`, `alphabet:`,
/// `initial:`, `final:`, `trans: <state> <symbol> <state>`,
/// `perm: <symbol> <cycles>`, `gamma:`; `#` starts a comment. States are
/// 0-based integers or bracketed labels resolved in order of first
/// appearance. Errors carry the offending line number.
inline ParsedAutomaton parse_automaton(const std::string& text) {
  detail::DocumentState doc;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;

  while (std::getline(stream, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(std::move(t));
    if (tokens.empty()) continue;

    const std::string& directive = tokens[0];
    if (directive == "states:") {
      if (doc.state_count >= 0) throw parse_error(line_no, "duplicate states: directive");
      if (tokens.size() != 2) throw parse_error(line_no, "states: expects one number");
      try {
        doc.state_count = std::stoi(tokens[1]);
      } catch (const std::exception&) {
        throw parse_error(line_no, "bad state count: " + tokens[1]);
      }
      if (doc.state_count < 1) throw parse_error(line_no, "state count must be positive");
    } else if (directive == "alphabet:") {
      if (doc.have_alphabet) throw parse_error(line_no, "duplicate alphabet: directive");
      doc.have_alphabet = true;
      doc.symbols.assign(tokens.begin() + 1, tokens.end());
      for (std::size_t i = 0; i < doc.symbols.size(); ++i)
        for (std::size_t j = i + 1; j < doc.symbols.size(); ++j)
          if (doc.symbols[i] == doc.symbols[j])
            throw parse_error(line_no, "duplicate symbol: " + doc.symbols[i]);
      doc.symbol_kind.assign(doc.symbols.size(), 0);
      doc.perm_of_symbol.assign(doc.symbols.size(), {});
    } else if (directive == "initial:") {
      if (doc.initial) throw parse_error(line_no, "duplicate initial: directive");
      if (tokens.size() != 2) throw parse_error(line_no, "initial: expects one state");
      doc.initial = doc.resolve_state(tokens[1], line_no);
    } else if (directive == "final:") {
      for (std::size_t i = 1; i < tokens.size(); ++i)
        doc.finals.push_back(doc.resolve_state(tokens[i], line_no));
    } else if (directive == "gamma:") {
      if (doc.gamma_names) throw parse_error(line_no, "duplicate gamma: directive");
      if (!doc.have_alphabet)
        throw parse_error(line_no, "gamma: before the alphabet: directive");
      doc.gamma_names.emplace(tokens.begin() + 1, tokens.end());
      for (const auto& name : *doc.gamma_names) doc.resolve_symbol(name, line_no);
    } else if (directive == "trans:") {
      if (!doc.have_alphabet)
        throw parse_error(line_no, "trans: before the alphabet: directive");
      if (tokens.size() != 4)
        throw parse_error(line_no, "trans: expects <state> <symbol> <state>");
      int from = doc.resolve_state(tokens[1], line_no);
      int symbol = doc.resolve_symbol(tokens[2], line_no);
      int to = doc.resolve_state(tokens[3], line_no);
      if (doc.symbol_kind[symbol] == 2)
        throw parse_error(line_no, "symbol " + tokens[2] +
                                       " already defined by a perm: line");
      doc.symbol_kind[symbol] = 1;
      for (const auto& t : doc.trans)
        if (t[0] == from && t[1] == symbol)
          throw parse_error(line_no, "duplicate transition for (" + tokens[1] + ", " +
                                         tokens[2] + ")");
      doc.trans.push_back({from, symbol, to, line_no});
    } else if (directive == "perm:") {
      if (!doc.have_alphabet)
        throw parse_error(line_no, "perm: before the alphabet: directive");
      if (tokens.size() < 2) throw parse_error(line_no, "perm: expects a symbol");
      int symbol = doc.resolve_symbol(tokens[1], line_no);
      if (doc.symbol_kind[symbol] != 0)
        throw parse_error(line_no, "symbol " + tokens[1] + " already defined");
      std::string cycle_text;
      for (std::size_t i = 2; i < tokens.size(); ++i) cycle_text += tokens[i] + " ";
      auto cycles = detail::parse_cycles(doc, cycle_text, line_no);
      try {
        doc.perm_of_symbol[symbol] = permutation_from_cycles(doc.state_count, cycles);
      } catch (const input_error& e) {
        throw parse_error(line_no, e.what());
      }
      doc.symbol_kind[symbol] = 2;
    } else {
      throw parse_error(line_no, "unknown directive: " + directive);
    }
  }

  if (doc.state_count < 0) throw parse_error(line_no, "missing states: directive");
  if (!doc.have_alphabet) throw parse_error(line_no, "missing alphabet: directive");
  if (!doc.initial) throw parse_error(line_no, "missing initial: directive");

  ParsedAutomaton out;
  out.dfa = make_empty_dfa(doc.state_count, doc.symbols, *doc.initial, doc.finals);
  for (const auto& [from, symbol, to, line] : doc.trans)
    out.dfa.step_ref(from, symbol) = to;
  for (std::size_t x = 0; x < doc.symbols.size(); ++x)
    if (doc.symbol_kind[x] == 2)
      set_letter_permutation(out.dfa, static_cast<int>(x), doc.perm_of_symbol[x]);
  validate(out.dfa);
  if (doc.gamma_names)
    out.gamma = symbol_set_by_name(out.dfa, *doc.gamma_names);
  return out;
}

/// Canonical serialization: integer states, directives in fixed order,
/// letters that act as total bijections rendered as `perm:` lines (cycle
/// notation, smallest-first), everything else as sorted `trans:` lines.
/// parse(serialize(d)) == d, and serialization is idempotent on parsed text.
inline std::string serialize_automaton(const Dfa& d,
                                       const std::optional<SymbolSet>& gamma = std::nullopt,
                                       const std::string& comment = "") {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines(comment);
    for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  }
  out << "states: " << d.state_count << "\n";
  out << "alphabet:";
  for (const auto& s : d.symbols) out << " " << s;
  out << "\n";
  out << "initial: " << d.initial << "\n";
  out << "final:";
  for (int f : d.finals) out << " " << f;
  out << "\n";
  if (gamma) {
    out << "gamma:";
    for (int x : *gamma) out << " " << d.symbols[x];
    out << "\n";
  }
  std::vector<char> as_perm(d.symbols.size(), 0);
  for (int x = 0; x < d.symbol_count(); ++x) {
    StateMap image = letter_action(d, x).image;
    if (!is_total_bijection(image)) continue;
    as_perm[x] = 1;
    out << "perm: " << d.symbols[x];
    auto cycles = cycles_of(image);
    if (!cycles.empty()) {
      out << " ";
      for (const auto& cycle : cycles) {
        out << "(";
        for (std::size_t i = 0; i < cycle.size(); ++i)
          out << (i ? "," : "") << cycle[i];
        out << ")";
      }
    }
    out << "\n";
  }
  for (int q = 0; q < d.state_count; ++q)
    for (int x = 0; x < d.symbol_count(); ++x) {
      int t = d.step(q, x);
      if (t != kUndefined && !as_perm[x])
        out << "trans: " << q << " " << d.symbols[x] << " " << t << "\n";
    }
  return out.str();
}

}  // namespace dfaproj
