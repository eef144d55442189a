#pragma once

#include <stdexcept>
#include <string>

namespace uxagent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed level, trace, envelope or config text. Line/column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + what
                       : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An action the engine refuses: moving into a wall, pressing out of range, stepping a finished world.
class IllegalAction : public Error {
 public:
  using Error::Error;
};

/// Percept that contradicts what the agent already knows; indicates an engine/model bug.
class ContradictoryPercept : public Error {
 public:
  using Error::Error;
};

class TickLimitExceeded : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace uxagent
