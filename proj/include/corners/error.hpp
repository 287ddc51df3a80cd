#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace corners {

enum class ErrorCode {
  MalformedInput,
  InvalidCornerStructure,
  NotAChainComplex,
  TooManyVertices,
  PastingPrecondition,
  DimensionTooSmall,
  EmptyTarget,
  GhostVertex,
  ReplayFailure,
  AmbientTooSmall,
  VoidComplex,
  DualityPrecondition,
};

/// Upper-case identifier used in CLI messages, e.g. "PASTING_PRECONDITION".
std::string_view error_name(ErrorCode code) noexcept;

/// Every module reports failures through this exception. The code decides
/// the CLI exit status: MalformedInput is exit 2, everything else exit 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
    case ErrorCode::InvalidCornerStructure: return "INVALID_CORNER_STRUCTURE";
    case ErrorCode::NotAChainComplex: return "NOT_A_CHAIN_COMPLEX";
    case ErrorCode::TooManyVertices: return "TOO_MANY_VERTICES";
    case ErrorCode::PastingPrecondition: return "PASTING_PRECONDITION";
    case ErrorCode::DimensionTooSmall: return "DIMENSION_TOO_SMALL";
    case ErrorCode::EmptyTarget: return "EMPTY_TARGET";
    case ErrorCode::GhostVertex: return "GHOST_VERTEX";
    case ErrorCode::ReplayFailure: return "REPLAY_FAILURE";
    case ErrorCode::AmbientTooSmall: return "AMBIENT_TOO_SMALL";
    case ErrorCode::VoidComplex: return "VOID_COMPLEX";
    case ErrorCode::DualityPrecondition: return "DUALITY_PRECONDITION";
  }
  return "UNKNOWN";
}

}  // namespace corners
