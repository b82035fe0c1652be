#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noncross/config.hpp"
#include "noncross/cyclo.hpp"

namespace noncross {

/// Exponent vector alpha = (i_1, j_1, ..., i_r, j_r) of the monomial
/// x_1^{i_1} y_1^{j_1} ... x_r^{i_r} y_r^{j_r}; an element of Gamma_D = Z^{2r}.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : entries_(dim, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> entries)
      : entries_(std::move(entries)) {}
  ExponentVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  static ExponentVector unit(std::size_t dim, std::size_t k) {
    ExponentVector e(dim);
    e.entries_[k] = 1;
    return e;
  }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t k) const { return entries_[k]; }
  std::int64_t& operator[](std::size_t k) { return entries_[k]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  /// x-exponent i_t of block t (1-based).
  std::int64_t x_exp(int t) const { return entries_[static_cast<std::size_t>(2 * t - 2)]; }
  /// y-exponent j_t of block t (1-based).
  std::int64_t y_exp(int t) const { return entries_[static_cast<std::size_t>(2 * t - 1)]; }

  std::int64_t total_degree() const;
  bool is_zero() const;
  /// Componentwise >= 0 (inside the cone).
  bool is_nonnegative() const;

  ExponentVector operator-() const;
  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  /// "(1,0,2,-1)".
  std::string to_string() const;

 private:
  std::vector<std::int64_t> entries_;
};

/// Right-to-left lexicographic order: the last coordinate decides first.
/// Throws Error(kConfig) on a length mismatch.
std::strong_ordering rtl_lex_compare(const ExponentVector& a, const ExponentVector& b);

struct RtlLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return rtl_lex_compare(a, b) < 0;
  }
};

/// One letter of a word in the generators: generator id g in 1..2r
/// (2t-1 is x_t, 2t is y_t) raised to +-1.
struct Letter {
  int generator = 1;
  int exponent = 1;
};
using GeneratorWord = std::vector<Letter>;

/// Exponent e with c(alpha, beta) = zeta_m^e, 0 <= e < m, where
/// x^alpha * x^beta = c(alpha, beta) * x^(alpha + beta).
std::int64_t cocycle_exponent(const AlgebraConfig& config, const ExponentVector& alpha,
                              const ExponentVector& beta);

/// The twisting scalar c(alpha, beta) as an element of Q(zeta_m).
CycNum cocycle(const AlgebraConfig& config, const ExponentVector& alpha,
               const ExponentVector& beta);

/// Element of the twisted Laurent algebra in normal form
/// sum a_alpha x_1^{i_1} y_1^{j_1} ... x_r^{i_r} y_r^{j_r}, coefficients on the left.
///
/// EXACT elements have finite support anywhere in Z^{2r}. TRUNCATED(N)
/// elements live in the nonnegative cone and are known modulo terms of total
/// degree > N.
class TwistedElement {
 public:
  using TermMap = std::map<ExponentVector, CycNum, RtlLexLess>;

  explicit TwistedElement(AlgebraConfig config) : config_(std::move(config)) {}

  static TwistedElement zero(const AlgebraConfig& config) { return TwistedElement(config); }
  static TwistedElement one(const AlgebraConfig& config);
  static TwistedElement constant(const AlgebraConfig& config, const CycNum& c);
  static TwistedElement constant(const AlgebraConfig& config, const Rational& q);
  static TwistedElement monomial(const AlgebraConfig& config, const ExponentVector& alpha,
                                 const CycNum& coeff);
  static TwistedElement monomial(const AlgebraConfig& config, const ExponentVector& alpha);
  /// x_t (is_y false) or y_t (is_y true), t 1-based.
  static TwistedElement generator(const AlgebraConfig& config, bool is_y, int t);

  const AlgebraConfig& config() const { return config_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const { return !precision_; }
  std::optional<int> precision() const { return precision_; }
  /// Coefficient of x^alpha (zero when absent).
  CycNum coeff(const ExponentVector& alpha) const;
  /// Coefficient of the zero exponent vector.
  CycNum constant_term() const;
  /// Number of stored terms.
  std::size_t size() const { return terms_.size(); }
  bool is_single_term() const { return terms_.size() == 1; }
  bool is_cone_supported() const;
  /// Largest total degree in the support (0 for zero).
  std::int64_t max_degree() const;

  /// Adds a * x^alpha, pruning a zero result. Truncated elements drop
  /// out-of-range terms and reject negative exponents.
  void add_term(const ExponentVector& alpha, const CycNum& a);

  /// TRUNCATED(N) copy; throws Error(kNotConeRegular) on negative exponents.
  TwistedElement truncated(int precision) const;
  /// EXACT copy of the stored terms.
  TwistedElement as_exact() const;
  /// Same mode, only terms of total degree <= bound kept.
  TwistedElement drop_above_degree(std::int64_t bound) const;
  /// Terms of total degree exactly d, same mode.
  TwistedElement homogeneous_part(std::int64_t d) const;

  TwistedElement operator-() const;
  TwistedElement& operator+=(const TwistedElement& other);
  TwistedElement& operator-=(const TwistedElement& other);
  friend TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
  friend TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a -= b; }
  friend TwistedElement operator*(const TwistedElement& a, const TwistedElement& b);
  TwistedElement scaled(const CycNum& s) const;

  /// Same config, same mode, same terms.
  friend bool operator==(const TwistedElement& a, const TwistedElement& b);

 private:
  friend TwistedElement mul(const TwistedElement& f, const TwistedElement& g);
  static std::optional<int> meet_precision(const TwistedElement& a, const TwistedElement& b);
  void check_compatible(const TwistedElement& other) const;

  AlgebraConfig config_;
  std::optional<int> precision_;
  TermMap terms_;
};

TwistedElement mul(const TwistedElement& f, const TwistedElement& g);
inline TwistedElement add(const TwistedElement& f, const TwistedElement& g) { return f + g; }
inline TwistedElement neg(const TwistedElement& f) { return -f; }
inline TwistedElement scalar_mul(const CycNum& s, const TwistedElement& f) { return f.scaled(s); }
/// f^e by repeated squaring; f^0 = 1 (in f's mode).
TwistedElement pow(const TwistedElement& f, std::uint64_t e);

/// Inverse of the unit a * x^alpha (an EXACT single-term element).
TwistedElement monomial_inverse(const AlgebraConfig& config, const ExponentVector& alpha,
                                const CycNum& a);

/// Normal-orders a generator word by adjacent swaps using only the defining
/// relations; the rewriting ground truth for the cocycle.
TwistedElement reduce_word(const AlgebraConfig& config, const GeneratorWord& word);

}  // namespace noncross
