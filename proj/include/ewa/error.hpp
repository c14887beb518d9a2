#pragma once

#include <stdexcept>
#include <string>

namespace ewa {

enum class ErrorCode {
  InvalidArgument,
  DegenerateGame,
  DomainError,
  NoFixedPoint,
  AlphaZero,
  BoundaryCase,
  NotApplicable,
  ZeroVariance,
  NumericalFailure,
  UnknownPreset,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; the C API maps
// the code onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ewa
