#include "mct/error.hpp"

namespace mct {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::ArityViolation: return "ArityViolation";
    case ErrorKind::WallViolation: return "WallViolation";
    case ErrorKind::CyclicHeights: return "CyclicHeights";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::TiedCoordinates: return "TiedCoordinates";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::NotACluster: return "NotACluster";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace mct
