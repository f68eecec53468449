#include "primcover/error.hpp"

namespace primcover {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedCycle: return "MalformedCycle";
    case ErrorCode::RepeatedPoint: return "RepeatedPoint";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::IndexCapExceeded: return "IndexCapExceeded";
    case ErrorCode::BadEll: return "BadEll";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::DifferentGroups: return "DifferentGroups";
    case ErrorCode::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::ProductNotIdentity: return "ProductNotIdentity";
    case ErrorCode::DoesNotGenerate: return "DoesNotGenerate";
    case ErrorCode::TrivialBranch: return "TrivialBranch";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace primcover
