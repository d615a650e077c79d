#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mct {

enum class ErrorKind {
  InvalidInput,
  IndexOutOfRange,
  DimensionMismatch,
  Overflow,
  NotATree,
  ArityViolation,
  WallViolation,
  CyclicHeights,
  NotARoot,
  TiedCoordinates,
  SingularMatrix,
  NonIntegralResult,
  NotACluster,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI can map it onto an exit status and a JSON error payload.
class MctError : public std::runtime_error {
 public:
  MctError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw MctError(kind, message);
}

}  // namespace mct
