#pragma once

#include <stdexcept>
#include <string>

namespace pica {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (files, pictures, alphabets).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Position or index window outside the allowed range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Concatenation with incompatible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or result set would exceed its caller-supplied cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the automaton's movement variant.
class UnsupportedVariant : public Error {
 public:
  using Error::Error;
};

/// Automata over incompatible alphabets, or a non-unary alphabet where unary is needed.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Deterministic-only operation applied to a nondeterministic automaton.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Operation precondition violated (e.g. flip attack on a rejected word).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Unknown name (witness, state, command argument).
class LookupError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pica
