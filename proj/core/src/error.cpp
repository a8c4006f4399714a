#include "rsparse/error.hpp"

namespace rsparse {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InfeasibleDomain: return "InfeasibleDomain";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::AllPruned: return "AllPruned";
    case ErrorCode::EpsTooLarge: return "EpsTooLarge";
    case ErrorCode::BadDims: return "BadDims";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace rsparse
