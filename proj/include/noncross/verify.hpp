#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "noncross/config.hpp"

namespace noncross {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  /// First failure, empty when passed.
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 500;
  /// Algebra configurations to exercise; empty selects the default set
  /// (2), (3), (2,2), (2,3), (3,3), (4,2).
  std::vector<AlgebraConfig> configs;
};

/// Runs every module's property suite. Deterministic for fixed seed and trials.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

std::vector<AlgebraConfig> default_verify_configs();

}  // namespace noncross
