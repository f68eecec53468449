#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace primcover {

enum class ErrorCode {
  MalformedCycle,
  RepeatedPoint,
  OutOfRange,
  DegreeMismatch,
  EmptyGeneratorList,
  NotTransitive,
  EqualPoints,
  OrderCapExceeded,
  NotASubgroup,
  IndexCapExceeded,
  BadEll,
  NotInGroup,
  TrivialGroup,
  DifferentGroups,
  LatticeCapExceeded,
  NotProper,
  UnsupportedDegree,
  ProductNotIdentity,
  DoesNotGenerate,
  TrivialBranch,
  NonIntegralGenus,
  BadDegree,
  BadInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can react to the specific violated condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace primcover
