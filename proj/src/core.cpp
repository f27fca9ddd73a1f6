#include "acw/error.hpp"
#include "acw/limits.hpp"

namespace acw {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroModulus: return "ZeroModulus";
    case ErrorKind::OrderOverflow: return "OrderOverflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IllFormedHom: return "IllFormedHom";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::ZeroProbabilityFiber: return "ZeroProbabilityFiber";
    case ErrorKind::InsufficientMass: return "InsufficientMass";
    case ErrorKind::SupportEscape: return "SupportEscape";
    case ErrorKind::DegenerateK: return "DegenerateK";
    case ErrorKind::BadRadius: return "BadRadius";
    case ErrorKind::NoRegularRadiusFound: return "NoRegularRadiusFound";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ContainmentFailed: return "ContainmentFailed";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {
Limits g_limits;
}

const Limits& limits() { return g_limits; }
void set_limits(const Limits& l) { g_limits = l; }

}  // namespace acw
