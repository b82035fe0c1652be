#include "noncross/error.hpp"

namespace noncross {

std::string_view error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "E_PARSE";
    case ErrorCode::kBadIndex:
      return "E_BAD_INDEX";
    case ErrorCode::kNonunitPow:
      return "E_NONUNIT_POW";
    case ErrorCode::kNotConeRegular:
      return "E_NOT_CONE_REGULAR";
    case ErrorCode::kNotOnePlusM:
      return "E_NOT_ONE_PLUS_M";
    case ErrorCode::kValUncertain:
      return "E_VAL_UNCERTAIN";
    case ErrorCode::kNotIntegral:
      return "E_NOT_INTEGRAL";
    case ErrorCode::kDivisionByZero:
      return "E_DIV_ZERO";
    case ErrorCode::kConfig:
      return "E_CONFIG";
    case ErrorCode::kInternal:
      return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotConeRegular:
    case ErrorCode::kNotOnePlusM:
    case ErrorCode::kValUncertain:
    case ErrorCode::kNotIntegral:
    case ErrorCode::kDivisionByZero:
    case ErrorCode::kInternal:
      return 1;
    case ErrorCode::kParse:
    case ErrorCode::kBadIndex:
    case ErrorCode::kNonunitPow:
      return 2;
    case ErrorCode::kConfig:
      return 3;
  }
  return 1;
}

}  // namespace noncross
