#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wavexfer {

/// Stable reason codes. The CLI prints them verbatim, so renaming one is a
/// breaking change for scripts that grep stderr.
enum class ErrorCode {
  UnknownFamily,
  NotOrthogonal,
  OddLength,
  TooShort,
  LengthMismatch,
  NotDivisible,
  OddAxisLength,
  ShapeMismatch,
  NotPositiveShape,
  MissingLayer,
  ShapeInconsistent,
  UnmatchedTensor,
  NotPowerOfTwoRatio,
  MixedDirection,
  ResidualShapeMismatch,
  DuplicateName,
  IoFailure,
  BadMagic,
  UnsupportedVersion,
  TruncatedFile,
  OverlappingSegments,
  NameOrderViolation,
  MalformedHeader,
  TargetNotReached,
  InvalidCurve,
  InvalidPolicy,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace wavexfer
