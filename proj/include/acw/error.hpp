#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acw {

enum class ErrorKind {
  ZeroModulus,
  OrderOverflow,
  DimensionMismatch,
  IllFormedHom,
  CapExceeded,
  EmptySet,
  GroupMismatch,
  ZeroProbabilityFiber,
  InsufficientMass,
  SupportEscape,
  DegenerateK,
  BadRadius,
  NoRegularRadiusFound,
  VerificationFailed,
  ContainmentFailed,
  NotRegular,
  HypothesisFailed,
  Infeasible,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is the
/// machine-readable part, `what()` carries the measured values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace acw
