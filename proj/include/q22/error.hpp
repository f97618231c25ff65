#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace q22 {

enum class ErrorCode {
  InvalidTolerance,
  ZeroVector,
  NotUnitary,
  NotSU2,
  NotUnitQuaternion,
  ChartUndefined,
  NotOnHypersurface,
  NotTangent,
  FrameUndefined,
  CriteriaDisagree,
  FibreInput,
  DegenerateConfiguration,
  NotOnCommonLine,
  ZeroCovector,
  TangentPlane,
  NotJInvariant,
  NotSymmetric,
  InvalidRadius,
  OnBranchLocus,
  FibreContained,
  MonodromyDetected,
  NotDisjoint,
  NotOnIntersection,
  NonTransverse,
  NotOnSigma,
  IOFailure,
};

constexpr std::string_view error_name(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotSU2: return "NotSU2";
    case ErrorCode::NotUnitQuaternion: return "NotUnitQuaternion";
    case ErrorCode::ChartUndefined: return "ChartUndefined";
    case ErrorCode::NotOnHypersurface: return "NotOnHypersurface";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::FrameUndefined: return "FrameUndefined";
    case ErrorCode::CriteriaDisagree: return "CriteriaDisagree";
    case ErrorCode::FibreInput: return "FibreInput";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NotOnCommonLine: return "NotOnCommonLine";
    case ErrorCode::ZeroCovector: return "ZeroCovector";
    case ErrorCode::TangentPlane: return "TangentPlane";
    case ErrorCode::NotJInvariant: return "NotJInvariant";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::OnBranchLocus: return "OnBranchLocus";
    case ErrorCode::FibreContained: return "FibreContained";
    case ErrorCode::MonodromyDetected: return "MonodromyDetected";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotOnIntersection: return "NotOnIntersection";
    case ErrorCode::NonTransverse: return "NonTransverse";
    case ErrorCode::NotOnSigma: return "NotOnSigma";
    case ErrorCode::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

/// Raised when an operation's mathematical precondition fails. The code
/// names the failed condition; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace q22
