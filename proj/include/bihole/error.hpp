#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bihole {

enum class ErrorKind {
  IndexOutOfRange,
  EmptySide,
  UnbalancedGraph,
  EmptyGraph,
  MalformedHeader,
  MalformedEdgeLine,
  InvalidProbability,
  InvalidSize,
  DegreeTooSmall,
  NoEdges,
  NegativeD,
  TraceMismatch,
  InstanceTooLarge,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type.
// `line` is set for text-parsing errors (1-based), 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace bihole
