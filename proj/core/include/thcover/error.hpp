#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or ordering text. `line()` is 1-based, 0 when the error
/// is not tied to a particular line (e.g. a missing edge line at EOF).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called on an input outside its domain (not a split graph,
/// not bipartite, too large for a brute-force oracle, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A property that the algorithm guarantees was observed to be false.
/// Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace thcover
