#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace noncross {

/// Block structure (n_1, ..., n_r) of a twisted Laurent algebra together with
/// the order m of the root of unity adjoined to the rationals.
///
/// By default m = lcm(n_1, ..., n_r). A larger base field (m a multiple of the
/// lcm) may be requested, which is how the witness algebras of the obstruction
/// pipeline are built over Q(zeta_n).
class AlgebraConfig {
 public:
  explicit AlgebraConfig(std::vector<int> blocks);
  AlgebraConfig(std::vector<int> blocks, int root_order);

  int r() const { return static_cast<int>(blocks_.size()); }
  /// Length of exponent vectors, 2r.
  int dim() const { return 2 * r(); }
  std::span<const int> blocks() const { return blocks_; }
  /// n_i for 1 <= i <= r.
  int block(int i) const;
  /// n = n_1 * ... * n_r.
  std::int64_t n() const { return n_; }
  /// Order of zeta_m in the coefficient field.
  int m() const { return m_; }
  /// m / n_i, the exponent with zeta_{n_i} = zeta_m^(m / n_i).
  int root_step(int i) const { return m_ / block(i); }

  std::string to_string() const;

  friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) = default;

 private:
  std::vector<int> blocks_;
  std::int64_t n_ = 1;
  int m_ = 1;
};

/// Parses "2,3" into an AlgebraConfig; throws Error(kConfig) on bad input.
AlgebraConfig parse_blocks(const std::string& text);

}  // namespace noncross
