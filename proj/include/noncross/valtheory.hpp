#pragma once

#include <compare>
#include <optional>
#include <string>

#include "noncross/twisted.hpp"

namespace noncross {

/// v(f) = min supp(f) under the right-to-left lexicographic order; infinity
/// for f = 0.
class ValuationResult {
 public:
  static ValuationResult infinity() { return ValuationResult(); }
  static ValuationResult finite(ExponentVector value) { return ValuationResult(std::move(value)); }

  bool is_infinite() const { return !value_; }
  /// Throws Error(kConfig) when infinite.
  const ExponentVector& value() const;

  /// v >= 0, i.e. membership in the valuation ring O_D.
  bool is_integral() const;
  /// v > 0, i.e. membership in the maximal ideal m_D.
  bool is_positive() const;

  /// "(1,0)" or "inf".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const ValuationResult& a, const ValuationResult& b);
  friend bool operator==(const ValuationResult& a, const ValuationResult& b) {
    return (a <=> b) == 0;
  }
  /// Sum in Gamma_D union {infinity}.
  friend ValuationResult operator+(const ValuationResult& a, const ValuationResult& b);

 private:
  ValuationResult() = default;
  explicit ValuationResult(ExponentVector value) : value_(std::move(value)) {}

  std::optional<ExponentVector> value_;
};

/// Throws Error(kValUncertain) for a truncated input without a constant term.
ValuationResult val(const TwistedElement& f);

/// Image of f in the residue field k: its constant coefficient.
/// Throws Error(kNotIntegral) if v(f) < 0.
CycNum residue(const TwistedElement& f);

struct LeadingSplit {
  CycNum coeff;
  ExponentVector exponent;
  /// f = coeff * x^exponent * (1 + tail), v(tail) > 0.
  TwistedElement tail;
};

/// Factors out the leading term of a nonzero EXACT element.
LeadingSplit leading_split(const TwistedElement& f);

/// Inverse of f modulo total degree > precision.
///
/// The tail of the leading split must stay in the nonnegative cone, otherwise
/// Error(kNotConeRegular). For v(f) = 0 the result is TRUNCATED(precision);
/// otherwise it is the EXACT Laurent polynomial S * (c x^alpha)^{-1} where S is
/// the geometric series of the tail truncated at the precision.
TwistedElement inv(const TwistedElement& f, int precision);

/// The unique n-th root of a in 1 + m_D, TRUNCATED(precision), solved one
/// homogeneous degree at a time. Throws Error(kNotOnePlusM) unless a = 1 + g
/// with g cone-supported and without constant term.
TwistedElement nth_root(const TwistedElement& a, int n, int precision);

}  // namespace noncross
