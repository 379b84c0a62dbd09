#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wspd {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter (epsilon, alpha, radius, dimension) is outside its valid range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The input violates a structural precondition (empty set, identical points,
// duplicate vertices, mismatched sizes).
class InputError : public Error {
 public:
  using Error::Error;
};

// Graph-metric distances were requested on a disconnected unit-distance graph.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

// A degenerate configuration the curve routines cannot resolve.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; the message carries the offending line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wspd
