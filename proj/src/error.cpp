#include "biprestar/error.hpp"

namespace biprestar {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionBySingular: return "DivisionBySingular";
    case ErrorCode::CompositionConstantTerm: return "CompositionConstantTerm";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ArgOutOfRange: return "ArgOutOfRange";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::InconsistentSample: return "InconsistentSample";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace biprestar
