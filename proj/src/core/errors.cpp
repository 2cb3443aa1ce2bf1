#include "mvf/errors.hpp"

namespace mvf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ClassViolation: return "ClassViolation";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::NotSPD: return "NotSPD";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::LogBranchFailure: return "LogBranchFailure";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::ZeroPrincipalMinor: return "ZeroPrincipalMinor";
    case ErrorCode::NonPositiveDeterminant: return "NonPositiveDeterminant";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonPositiveSample: return "NonPositiveSample";
    case ErrorCode::SignPatternViolation: return "SignPatternViolation";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::SignVectorMismatch: return "SignVectorMismatch";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::SelfCheckFailed: return "SelfCheckFailed";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<int> index,
             std::optional<int> sample)
    : std::runtime_error(what), code_(code), index_(index), sample_(sample) {}

Error Error::at_sample(int sample) const {
  return Error(code_, std::string(what()) + " at sample " + std::to_string(sample),
               index_, sample);
}

}  // namespace mvf
