#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mvf {

enum class ErrorCode {
  InvalidArgument,
  ClassViolation,
  ClassMismatch,
  NotSPD,
  NotSymmetric,
  NotSkew,
  LogBranchFailure,
  SingularInput,
  ZeroPrincipalMinor,
  NonPositiveDeterminant,
  DegreeMismatch,
  NonPositiveSample,
  SignPatternViolation,
  ZeroDiagonal,
  SignVectorMismatch,
  OutOfDomain,
  SelfCheckFailed,
  Parse,
};

const char* to_string(ErrorCode code);

// All numeric and precondition failures in the library are reported with this
// type. `index` is the operation-specific index (minor order, interval,
// diagonal position); `sample` is the offending sample when the failure
// happened while processing a sample sequence.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<int> index = std::nullopt,
        std::optional<int> sample = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> index() const noexcept { return index_; }
  std::optional<int> sample() const noexcept { return sample_; }

  // Same error, tagged with the sample it occurred at.
  Error at_sample(int sample) const;

 private:
  ErrorCode code_;
  std::optional<int> index_;
  std::optional<int> sample_;
};

}  // namespace mvf
