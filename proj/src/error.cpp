#include "graphentropy/error.hpp"

namespace graphentropy {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSize: return "invalid size";
    case ErrorCode::InvalidStep: return "invalid step";
    case ErrorCode::InvalidProbability: return "invalid probability";
    case ErrorCode::InvalidParameter: return "invalid parameter";
    case ErrorCode::DisconnectedGraph: return "disconnected graph";
    case ErrorCode::IsolatedNode: return "isolated node";
    case ErrorCode::NodeOutOfRange: return "node out of range";
    case ErrorCode::EdgeAlreadyPresent: return "edge already present";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::DuplicateEdge: return "duplicate edge";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::NumericInput: return "numeric input";
    case ErrorCode::NumericFailure: return "numeric failure";
    case ErrorCode::NoMixing: return "no mixing";
    case ErrorCode::SupportViolation: return "support violation";
    case ErrorCode::Subcritical: return "subcritical";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Config: return "config error";
  }
  return "error";
}

}  // namespace graphentropy
