#include "wavexfer/error.hpp"

namespace wavexfer {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OddAxisLength: return "OddAxisLength";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotPositiveShape: return "NotPositiveShape";
    case ErrorCode::MissingLayer: return "MissingLayer";
    case ErrorCode::ShapeInconsistent: return "ShapeInconsistent";
    case ErrorCode::UnmatchedTensor: return "UnmatchedTensor";
    case ErrorCode::NotPowerOfTwoRatio: return "NotPowerOfTwoRatio";
    case ErrorCode::MixedDirection: return "MixedDirection";
    case ErrorCode::ResidualShapeMismatch: return "ResidualShapeMismatch";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::TruncatedFile: return "TruncatedFile";
    case ErrorCode::OverlappingSegments: return "OverlappingSegments";
    case ErrorCode::NameOrderViolation: return "NameOrderViolation";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TargetNotReached: return "TargetNotReached";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::InvalidPolicy: return "InvalidPolicy";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace wavexfer
