#include "ewa/error.hpp"

namespace ewa {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::DegenerateGame: return "degenerate_game";
    case ErrorCode::DomainError: return "domain_error";
    case ErrorCode::NoFixedPoint: return "no_fixed_point";
    case ErrorCode::AlphaZero: return "alpha_zero";
    case ErrorCode::BoundaryCase: return "boundary_case";
    case ErrorCode::NotApplicable: return "not_applicable";
    case ErrorCode::ZeroVariance: return "zero_variance";
    case ErrorCode::NumericalFailure: return "numerical_failure";
    case ErrorCode::UnknownPreset: return "unknown_preset";
  }
  return "unknown";
}

}  // namespace ewa
