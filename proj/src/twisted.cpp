#include "noncross/twisted.hpp"

#include <algorithm>

#include "noncross/error.hpp"

namespace noncross {

// ---------------------------------------------------------------------------
// ExponentVector

std::int64_t ExponentVector::total_degree() const {
  std::int64_t d = 0;
  for (auto e : entries_) d += e;
  return d;
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

bool ExponentVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e >= 0; });
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.size() != size()) throw Error(ErrorCode::kConfig, "exponent length mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  if (other.size() != size()) throw Error(ErrorCode::kConfig, "exponent length mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

std::string ExponentVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(entries_[k]);
  }
  return out + ")";
}

std::strong_ordering rtl_lex_compare(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kConfig, "cannot compare exponent vectors of lengths " +
                                        std::to_string(a.size()) + " and " +
                                        std::to_string(b.size()));
  }
  for (std::size_t k = a.size(); k-- > 0;) {
    if (auto c = a[k] <=> b[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Cocycle

namespace {

void check_length(const AlgebraConfig& config, const ExponentVector& alpha) {
  if (alpha.size() != static_cast<std::size_t>(config.dim())) {
    throw Error(ErrorCode::kConfig, "exponent vector " + alpha.to_string() +
                                        " does not have length " +
                                        std::to_string(config.dim()));
  }
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t cocycle_exponent(const AlgebraConfig& config, const ExponentVector& alpha,
                              const ExponentVector& beta) {
  check_length(config, alpha);
  check_length(config, beta);
  // Moving x_t^{i'} left past y_t^{j} costs zeta_{n_t}^{-j i'}.
  const std::int64_t m = config.m();
  std::int64_t e = 0;
  for (int t = 1; t <= config.r(); ++t) {
    const std::int64_t jt = mod_floor(alpha.y_exp(t), m);
    const std::int64_t it = mod_floor(beta.x_exp(t), m);
    e = mod_floor(e - config.root_step(t) * mod_floor(jt * it, m), m);
  }
  return e;
}

CycNum cocycle(const AlgebraConfig& config, const ExponentVector& alpha,
               const ExponentVector& beta) {
  return CycNum::zeta_power(config.m(), cocycle_exponent(config, alpha, beta));
}

// ---------------------------------------------------------------------------
// TwistedElement

TwistedElement TwistedElement::one(const AlgebraConfig& config) {
  return constant(config, CycNum::one(config.m()));
}

TwistedElement TwistedElement::constant(const AlgebraConfig& config, const CycNum& c) {
  return monomial(config, ExponentVector(static_cast<std::size_t>(config.dim())), c);
}

TwistedElement TwistedElement::constant(const AlgebraConfig& config, const Rational& q) {
  return constant(config, CycNum::from_rational(config.m(), q));
}

TwistedElement TwistedElement::monomial(const AlgebraConfig& config,
                                        const ExponentVector& alpha, const CycNum& coeff) {
  check_length(config, alpha);
  if (coeff.order() != config.m()) {
    throw Error(ErrorCode::kConfig, "coefficient field does not match the algebra");
  }
  TwistedElement out(config);
  out.add_term(alpha, coeff);
  return out;
}

TwistedElement TwistedElement::monomial(const AlgebraConfig& config,
                                        const ExponentVector& alpha) {
  return monomial(config, alpha, CycNum::one(config.m()));
}

TwistedElement TwistedElement::generator(const AlgebraConfig& config, bool is_y, int t) {
  if (t < 1 || t > config.r()) {
    throw Error(ErrorCode::kBadIndex, "generator index " + std::to_string(t) +
                                          " outside 1.." + std::to_string(config.r()));
  }
  const auto k = static_cast<std::size_t>(2 * t - (is_y ? 1 : 2));
  return monomial(config, ExponentVector::unit(static_cast<std::size_t>(config.dim()), k));
}

CycNum TwistedElement::coeff(const ExponentVector& alpha) const {
  if (auto it = terms_.find(alpha); it != terms_.end()) return it->second;
  return CycNum::zero(config_.m());
}

CycNum TwistedElement::constant_term() const {
  return coeff(ExponentVector(static_cast<std::size_t>(config_.dim())));
}

bool TwistedElement::is_cone_supported() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.is_nonnegative(); });
}

std::int64_t TwistedElement::max_degree() const {
  std::int64_t d = 0;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    const auto deg = alpha.total_degree();
    if (first || deg > d) d = deg;
    first = false;
  }
  return d;
}

void TwistedElement::add_term(const ExponentVector& alpha, const CycNum& a) {
  if (alpha.size() != static_cast<std::size_t>(config_.dim())) check_length(config_, alpha);
  if (a.order() != config_.m()) {
    throw Error(ErrorCode::kConfig, "coefficient field does not match the algebra");
  }
  if (a.is_zero()) return;
  if (precision_) {
    if (!alpha.is_nonnegative()) {
      throw Error(ErrorCode::kNotConeRegular,
                  "truncated element cannot hold exponent " + alpha.to_string());
    }
    if (alpha.total_degree() > *precision_) return;
  }
  auto [it, inserted] = terms_.try_emplace(alpha, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TwistedElement TwistedElement::truncated(int precision) const {
  if (precision < 0) throw Error(ErrorCode::kConfig, "precision must be >= 0");
  if (precision_ && *precision_ < precision) {
    throw Error(ErrorCode::kConfig, "cannot raise precision " + std::to_string(*precision_) +
                                        " to " + std::to_string(precision));
  }
  TwistedElement out(config_);
  out.precision_ = precision;
  for (const auto& [alpha, c] : terms_) out.add_term(alpha, c);
  return out;
}

TwistedElement TwistedElement::as_exact() const {
  TwistedElement out = *this;
  out.precision_.reset();
  return out;
}

TwistedElement TwistedElement::drop_above_degree(std::int64_t bound) const {
  TwistedElement out(config_);
  out.precision_ = precision_;
  for (const auto& [alpha, c] : terms_) {
    if (alpha.total_degree() <= bound) out.terms_.emplace_hint(out.terms_.end(), alpha, c);
  }
  return out;
}

TwistedElement TwistedElement::homogeneous_part(std::int64_t d) const {
  TwistedElement out(config_);
  out.precision_ = precision_;
  for (const auto& [alpha, c] : terms_) {
    if (alpha.total_degree() == d) out.terms_.emplace_hint(out.terms_.end(), alpha, c);
  }
  return out;
}

void TwistedElement::check_compatible(const TwistedElement& other) const {
  if (!(config_ == other.config_)) {
    throw Error(ErrorCode::kConfig, "algebra configurations differ: " +
                                        config_.to_string() + " vs " +
                                        other.config_.to_string());
  }
}

std::optional<int> TwistedElement::meet_precision(const TwistedElement& a,
                                                  const TwistedElement& b) {
  a.check_compatible(b);
  std::optional<int> p = a.precision_;
  if (b.precision_ && (!p || *b.precision_ < *p)) p = b.precision_;
  if (p) {
    // An EXACT operand is read at the truncated precision.
    for (const auto* e : {&a, &b}) {
      if (e->is_exact() && !e->is_cone_supported()) {
        throw Error(ErrorCode::kNotConeRegular,
                    "exact operand with negative exponents mixed with a truncated one");
      }
    }
  }
  return p;
}

TwistedElement TwistedElement::operator-() const {
  TwistedElement out = *this;
  for (auto& [alpha, c] : out.terms_) c = -c;
  return out;
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& other) {
  const auto p = meet_precision(*this, other);
  if (p != precision_) *this = truncated(*p);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

TwistedElement& TwistedElement::operator-=(const TwistedElement& other) {
  return *this += -other;
}

TwistedElement TwistedElement::scaled(const CycNum& s) const {
  TwistedElement out(config_);
  out.precision_ = precision_;
  if (s.is_zero()) return out;
  for (const auto& [alpha, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), alpha, c * s);
  return out;
}

bool operator==(const TwistedElement& a, const TwistedElement& b) {
  return a.config_ == b.config_ && a.precision_ == b.precision_ && a.terms_ == b.terms_;
}

TwistedElement operator*(const TwistedElement& a, const TwistedElement& b) {
  return mul(a, b);
}

TwistedElement mul(const TwistedElement& f, const TwistedElement& g) {
  const auto p = TwistedElement::meet_precision(f, g);
  const AlgebraConfig& config = f.config();
  TwistedElement out(config);
  out.precision_ = p;
  if (f.is_zero() || g.is_zero()) return out;

  struct Entry {
    std::int64_t degree;
    const ExponentVector* alpha;
    const CycNum* coeff;
  };
  std::vector<Entry> right;
  right.reserve(g.size());
  for (const auto& [alpha, c] : g.terms()) right.push_back({alpha.total_degree(), &alpha, &c});
  if (p) {
    std::stable_sort(right.begin(), right.end(),
                     [](const Entry& x, const Entry& y) { return x.degree < y.degree; });
  }

  std::vector<std::optional<CycNum>> zetas(static_cast<std::size_t>(config.m()));
  auto zeta = [&](std::int64_t e) -> const CycNum& {
    auto& slot = zetas[static_cast<std::size_t>(e)];
    if (!slot) slot = CycNum::zeta_power(config.m(), e);
    return *slot;
  };

  for (const auto& [alpha, a] : f.terms()) {
    const std::int64_t da = alpha.total_degree();
    if (p && da > *p) continue;
    for (const Entry& e : right) {
      if (p && da + e.degree > *p) break;
      CycNum c = a * *e.coeff;
      if (const auto k = cocycle_exponent(config, alpha, *e.alpha); k != 0) c *= zeta(k);
      out.add_term(alpha + *e.alpha, c);
    }
  }
  return out;
}

TwistedElement pow(const TwistedElement& f, std::uint64_t e) {
  TwistedElement result = TwistedElement::one(f.config());
  if (f.precision()) result = result.truncated(*f.precision());
  TwistedElement base = f;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

TwistedElement monomial_inverse(const AlgebraConfig& config, const ExponentVector& alpha,
                                const CycNum& a) {
  // x^{-alpha} x^{alpha} = c(-alpha, alpha), so (x^alpha)^{-1} = c^{-1} x^{-alpha}.
  const ExponentVector minus = -alpha;
  const std::int64_t e = cocycle_exponent(config, minus, alpha);
  CycNum coeff = a.inverse() * CycNum::zeta_power(config.m(), -e);
  return TwistedElement::monomial(config, minus, coeff);
}

TwistedElement reduce_word(const AlgebraConfig& config, const GeneratorWord& word) {
  const int gens = config.dim();
  for (const Letter& l : word) {
    if (l.generator < 1 || l.generator > gens || (l.exponent != 1 && l.exponent != -1)) {
      throw Error(ErrorCode::kConfig, "invalid generator letter");
    }
  }
  GeneratorWord letters = word;
  const std::int64_t m = config.m();
  std::int64_t zeta_exp = 0;
  // Bubble sort into ascending generator id. Only y_t^e x_t^f needs a scalar:
  // x y = zeta y x gives y^e x^f = zeta^{-ef} x^f y^e. Other pairs commute.
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
      Letter& left = letters[k];
      Letter& right = letters[k + 1];
      if (left.generator <= right.generator) continue;
      const int left_block = (left.generator + 1) / 2;
      const int right_block = (right.generator + 1) / 2;
      const bool left_is_y = left.generator % 2 == 0;
      const bool right_is_x = right.generator % 2 == 1;
      if (left_block == right_block && left_is_y && right_is_x) {
        zeta_exp -= static_cast<std::int64_t>(config.root_step(left_block)) * left.exponent *
                    right.exponent;
        zeta_exp = mod_floor(zeta_exp, m);
      }
      std::swap(left, right);
      swapped = true;
    }
  }
  ExponentVector alpha(static_cast<std::size_t>(gens));
  for (const Letter& l : letters) alpha[static_cast<std::size_t>(l.generator - 1)] += l.exponent;
  return TwistedElement::monomial(config, alpha, CycNum::zeta_power(config.m(), zeta_exp));
}

}  // namespace noncross
