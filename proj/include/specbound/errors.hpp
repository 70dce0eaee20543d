#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace specbound {

enum class ErrorCode {
  ZeroRowSum,
  NoConvergence,
  MalformedLine,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  IsolatedVertex,
  NotSymmetric,
  RefusedReducible,
  InvariantViolation,
};

/// Domain error with a machine-checkable code. The text-format parsers fill
/// in 1-based line/column; everything else leaves them at -1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, int line = -1, int column = -1)
      : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

}  // namespace specbound
