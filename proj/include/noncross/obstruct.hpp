#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noncross/config.hpp"
#include "noncross/lattice.hpp"

namespace noncross {

enum class Verdict { kNoncrossed, kInconclusive, kInapplicable };

std::string_view verdict_name(Verdict v);

struct ObstructionCertificate {
  std::int64_t n = 0;
  std::int64_t characteristic = 0;
  std::vector<std::int64_t> factorization;
  /// Group forced by the first witness: (+)_j Z_{p_j}.
  AbelianGroupType forced_group;
  int forced_rank = 0;
  /// rank(Z_n + Z_n) computed from the second witness's value-group quotient.
  int second_witness_bound = 0;
  std::optional<std::int64_t> cube_prime;
  std::optional<AlgebraConfig> first_witness;
  std::optional<AlgebraConfig> second_witness;
  /// Human-readable argument steps, in order.
  std::vector<std::string> trail;
};

struct ObstructionVerdict {
  Verdict verdict = Verdict::kInconclusive;
  ObstructionCertificate certificate;
};

/// Sorted prime multiset with product n (trial division). n >= 2.
std::vector<std::int64_t> factorize(std::int64_t n);

/// Type of (+)_j Z_{p_j} in invariant-factor form.
AbelianGroupType forced_group_type(const std::vector<std::int64_t>& primes);

/// D_1 = Delta_{2r}(Q(zeta_n); p_1, ..., p_r) and D_2 = Delta_2(Q(zeta_n); n).
std::pair<AlgebraConfig, AlgebraConfig> witness_configs(std::int64_t n);

/// Runs the two-witness rank argument for degree n over a base field of the
/// given characteristic (0 or a prime).
ObstructionVerdict obstruction(std::int64_t n, std::int64_t characteristic);

}  // namespace noncross
