#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cospec {

/// Precondition violation on a public operation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds the configured census ceiling.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 code or polynomial text).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A vertex whose neighbour count into some cell differs from the rest of its own cell.
class NotEquitable : public std::runtime_error {
 public:
  NotEquitable(int vertex, int cell)
      : std::runtime_error("partition is not equitable: vertex " + std::to_string(vertex) +
                           " has a deviating neighbour count into cell " + std::to_string(cell)),
        vertex_(vertex),
        cell_(cell) {}

  int vertex() const noexcept { return vertex_; }
  int cell() const noexcept { return cell_; }

 private:
  int vertex_;
  int cell_;
};

/// Rational bisection hit the denominator cap before two roots could be separated.
class IsolationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cospec
