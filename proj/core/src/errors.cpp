#include "fdzeros/errors.hpp"

namespace fdzeros {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kTooFewRoots: return "TooFewRoots";
    case ErrorCode::kNotRealRooted: return "NotRealRooted";
    case ErrorCode::kDegreeGapTooLarge: return "DegreeGapTooLarge";
    case ErrorCode::kImaginaryResidue: return "ImaginaryResidue";
    case ErrorCode::kDegreeExceedsFrame: return "DegreeExceedsFrame";
    case ErrorCode::kDegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::kDegenerateQ: return "DegenerateQ";
    case ErrorCode::kMatchAmbiguity: return "MatchAmbiguity";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fdzeros
