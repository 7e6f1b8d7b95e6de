#pragma once

#include <stdexcept>
#include <string>

namespace ahs {

enum class ErrorKind {
  InvalidRank,
  InvalidNode,
  NoOneGrading,
  GradeError,
  DimensionMismatch,
  OrderExhausted,
  FiberMismatch,
  NoAdjacentRoot,
  SingularPairing,
  InvalidConfig,
};

const char* to_string(ErrorKind kind);

/// Exception carrying one of the error kinds named in the library contracts.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidNode: return "InvalidNode";
    case ErrorKind::NoOneGrading: return "NoOneGrading";
    case ErrorKind::GradeError: return "GradeError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OrderExhausted: return "OrderExhausted";
    case ErrorKind::FiberMismatch: return "FiberMismatch";
    case ErrorKind::NoAdjacentRoot: return "NoAdjacentRoot";
    case ErrorKind::SingularPairing: return "SingularPairing";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace ahs
