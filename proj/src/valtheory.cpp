#include "noncross/valtheory.hpp"

#include "noncross/error.hpp"

namespace noncross {

const ExponentVector& ValuationResult::value() const {
  if (!value_) throw Error(ErrorCode::kConfig, "valuation is infinite");
  return *value_;
}

bool ValuationResult::is_integral() const {
  if (!value_) return true;
  return rtl_lex_compare(*value_, ExponentVector(value_->size())) >= 0;
}

bool ValuationResult::is_positive() const {
  if (!value_) return true;
  return rtl_lex_compare(*value_, ExponentVector(value_->size())) > 0;
}

std::string ValuationResult::to_string() const {
  return value_ ? value_->to_string() : std::string("inf");
}

std::strong_ordering operator<=>(const ValuationResult& a, const ValuationResult& b) {
  if (!a.value_ || !b.value_) {
    return static_cast<bool>(b.value_) <=> static_cast<bool>(a.value_);
  }
  return rtl_lex_compare(*a.value_, *b.value_);
}

ValuationResult operator+(const ValuationResult& a, const ValuationResult& b) {
  if (!a.value_ || !b.value_) return ValuationResult::infinity();
  return ValuationResult::finite(*a.value_ + *b.value_);
}

ValuationResult val(const TwistedElement& f) {
  if (f.is_exact()) {
    if (f.is_zero()) return ValuationResult::infinity();
    // The term map is ordered by rtl-lex, so the first key is the minimum.
    return ValuationResult::finite(f.terms().begin()->first);
  }
  // In the cone the zero vector is the rtl-lex minimum; anything else could be
  // undercut by a dropped high-degree term.
  if (f.is_zero() || !f.terms().begin()->first.is_zero()) {
    throw Error(ErrorCode::kValUncertain,
                "valuation of a truncated element without constant term is not determined");
  }
  return ValuationResult::finite(f.terms().begin()->first);
}

CycNum residue(const TwistedElement& f) {
  if (f.is_exact() && !val(f).is_integral()) {
    throw Error(ErrorCode::kNotIntegral,
                "residue requires v(f) >= 0, got v(f) = " + val(f).to_string());
  }
  return f.constant_term();
}

LeadingSplit leading_split(const TwistedElement& f) {
  if (f.is_zero()) throw Error(ErrorCode::kDivisionByZero, "leading term of zero");
  const ExponentVector alpha = val(f).value();
  const CycNum lead = f.coeff(alpha);
  TwistedElement unit_part =
      mul(monomial_inverse(f.config(), alpha, lead), f) - TwistedElement::one(f.config());
  return LeadingSplit{lead, alpha, std::move(unit_part)};
}

TwistedElement inv(const TwistedElement& f, int precision) {
  if (precision < 0) throw Error(ErrorCode::kConfig, "precision must be >= 0");
  if (f.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  LeadingSplit split = leading_split(f);
  if (!split.tail.is_cone_supported()) {
    throw Error(ErrorCode::kNotConeRegular,
                "tail after factoring out the leading term leaves the nonnegative cone");
  }
  // (1 + t)^{-1} = sum_k (-t)^k, evaluated Horner-style.
  const AlgebraConfig& config = f.config();
  const TwistedElement one = TwistedElement::one(config).truncated(precision);
  const TwistedElement minus_tail = (-split.tail).truncated(precision);
  TwistedElement series = one;
  for (int k = 0; k < precision; ++k) series = one + mul(minus_tail, series);

  // f = c x^alpha (1 + t)  =>  f^{-1} = (1 + t)^{-1} (c x^alpha)^{-1}.
  const TwistedElement lead_inverse = monomial_inverse(config, split.exponent, split.coeff);
  if (split.exponent.is_zero()) return mul(series, lead_inverse);
  return mul(series.as_exact(), lead_inverse);
}

TwistedElement nth_root(const TwistedElement& a, int n, int precision) {
  if (n < 1) throw Error(ErrorCode::kConfig, "root degree must be >= 1");
  if (precision < 0) throw Error(ErrorCode::kConfig, "precision must be >= 0");
  if (a.precision() && *a.precision() < precision) {
    throw Error(ErrorCode::kConfig, "input known only to precision " +
                                        std::to_string(*a.precision()) + ", requested " +
                                        std::to_string(precision));
  }
  if (!a.is_cone_supported()) {
    throw Error(ErrorCode::kNotOnePlusM, "support leaves the nonnegative cone");
  }
  if (!a.constant_term().is_one()) {
    throw Error(ErrorCode::kNotOnePlusM, "constant term is not 1");
  }
  const AlgebraConfig& config = a.config();
  const TwistedElement target = a.truncated(precision);
  const CycNum inv_n = CycNum::from_rational(config.m(), Rational(1, n));

  // With b = 1 + b_1 + ... + b_{d-1} known, the degree-d part of
  // (b + b_d)^n is [b^n]_d + n b_d, since every other occurrence of b_d is
  // multiplied by a term of positive degree.
  TwistedElement root = TwistedElement::one(config).truncated(precision);
  for (int d = 1; d <= precision; ++d) {
    const TwistedElement power = pow(root.truncated(d), static_cast<std::uint64_t>(n));
    TwistedElement correction =
        target.homogeneous_part(d).as_exact() - power.homogeneous_part(d).as_exact();
    root += correction.scaled(inv_n);
  }
  return root;
}

}  // namespace noncross
