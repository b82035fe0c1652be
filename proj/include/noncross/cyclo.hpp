#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "noncross/config.hpp"

namespace noncross {

using Rational = mpq_class;

/// Integer polynomial, coefficients in ascending degree.
using IntPoly = std::vector<std::int64_t>;

/// The m-th cyclotomic polynomial Phi_m (monic, degree phi(m)).
IntPoly cyclotomic_poly(int m);

/// Euler's totient.
int euler_phi(int m);

namespace detail {
struct CyclotomicData;
}

/// Exact element of Q(zeta_m), stored as sum_t c_t zeta_m^t for
/// 0 <= t < phi(m). The coefficient vector always has length phi(m).
class CycNum {
 public:
  static CycNum zero(int m);
  static CycNum one(int m);
  static CycNum from_rational(int m, const Rational& q);
  /// zeta_m^e, reduced; e may be any integer.
  static CycNum zeta_power(int m, std::int64_t e);
  /// Element from a coefficient list in powers of zeta_m (any length; reduced).
  static CycNum from_coeffs(int m, std::span<const Rational> coeffs);

  int order() const;
  int degree_bound() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when only the zeta^0 coefficient may be nonzero.
  bool is_rational() const;
  /// The zeta^0 coefficient.
  const Rational& rational_part() const { return coeffs_.front(); }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

  /// Multiplicative inverse via extended Euclid against Phi_m.
  /// Throws Error(kDivisionByZero) for zero.
  CycNum inverse() const;
  /// a^e for any integer e (negative exponents invert).
  CycNum pow(std::int64_t e) const;

  friend bool operator==(const CycNum& a, const CycNum& b);

 private:
  CycNum(std::shared_ptr<const detail::CyclotomicData> field,
         std::vector<Rational> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  void check_same_field(const CycNum& other) const;

  std::shared_ptr<const detail::CyclotomicData> field_;
  std::vector<Rational> coeffs_;
};

// Free-function spellings of the field operations.
inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_neg(const CycNum& a) { return -a; }
inline CycNum cyc_inv(const CycNum& a) { return a.inverse(); }

/// zeta_{n_i} = zeta_m^(m / n_i) for block i (1-based).
CycNum primitive_root(const AlgebraConfig& config, int i);

}  // namespace noncross
