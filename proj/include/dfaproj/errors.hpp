#pragma once

#include <stdexcept>
#include <string>

namespace dfaproj {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown symbols, out-of-range states, bad documents.
struct input_error : error {
  using error::error;
};

/// Operation invoked on an automaton of the wrong kind
/// (e.g. a permutation-only algorithm on a non-permutation DFA).
struct mode_error : error {
  using error::error;
};

/// A documented precondition of the operation does not hold.
struct precondition_error : error {
  using error::error;
};

/// Numeric or configuration parameter outside its admissible range.
struct parameter_error : error {
  using error::error;
};

/// Text-format parse failure; carries the 1-based source line.
struct parse_error : input_error {
  int line;
  parse_error(int line_no, const std::string& message)
      : input_error("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
};

}  // namespace dfaproj
