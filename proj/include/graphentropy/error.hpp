#pragma once

#include <stdexcept>
#include <string>

namespace graphentropy {

enum class ErrorCode {
  InvalidSize,
  InvalidStep,
  InvalidProbability,
  InvalidParameter,
  DisconnectedGraph,
  IsolatedNode,
  NodeOutOfRange,
  EdgeAlreadyPresent,
  SelfLoop,
  DuplicateEdge,
  DimensionMismatch,
  NumericInput,
  NumericFailure,
  NoMixing,
  SupportViolation,
  Subcritical,
  Parse,
  Config,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures of floating-point computation rather than bad input.
  bool is_numeric() const noexcept {
    return code_ == ErrorCode::NumericFailure || code_ == ErrorCode::NumericInput;
  }

 private:
  ErrorCode code_;
};

}  // namespace graphentropy
