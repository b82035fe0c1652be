#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noncross {

enum class ErrorCode {
  kParse,             // E_PARSE
  kBadIndex,          // E_BAD_INDEX
  kNonunitPow,        // E_NONUNIT_POW
  kNotConeRegular,    // E_NOT_CONE_REGULAR
  kNotOnePlusM,       // E_NOT_ONE_PLUS_M
  kValUncertain,      // E_VAL_UNCERTAIN
  kNotIntegral,       // E_NOT_INTEGRAL
  kDivisionByZero,    // E_DIV_ZERO
  kConfig,            // E_CONFIG: bad blocks, mismatched configs, bad arguments
  kInternal,          // E_INTERNAL: broken invariant (e.g. reducible modulus)
};

/// Stable tag printed by the CLI, e.g. "E_NOT_CONE_REGULAR".
std::string_view error_tag(ErrorCode code);

/// Process exit code for the CLI: 1 math, 2 parse, 3 configuration.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace noncross
