#include "noncross/verify.hpp"

#include <functional>
#include <map>

#include "noncross/error.hpp"
#include "noncross/expr.hpp"
#include "noncross/format.hpp"
#include "noncross/lattice.hpp"
#include "noncross/obstruct.hpp"
#include "noncross/random.hpp"
#include "noncross/twisted.hpp"
#include "noncross/valtheory.hpp"

namespace noncross {

std::vector<AlgebraConfig> default_verify_configs() {
  return {AlgebraConfig({2}),    AlgebraConfig({3}),    AlgebraConfig({2, 2}),
          AlgebraConfig({2, 3}), AlgebraConfig({3, 3}), AlgebraConfig({4, 2})};
}

namespace {

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed, int trials,
        const std::vector<AlgebraConfig>& configs)
      : rng_(seed), trials_(trials), configs_(configs) {
    result_.name = std::move(name);
  }

  Rng& rng() { return rng_; }
  const std::vector<AlgebraConfig>& configs() const { return configs_; }
  /// trials scaled by weight/500, at least 1.
  int trials(int weight = 500) const { return std::max(1, trials_ * weight / 500); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }
  void fail(std::string detail) {
    if (result_.passed) {
      result_.passed = false;
      result_.detail = std::move(detail);
    }
  }
  SuiteResult result() const { return result_; }

 private:
  Rng rng_;
  int trials_;
  const std::vector<AlgebraConfig>& configs_;
  SuiteResult result_;
};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string show(const TwistedElement& f) { return format_element(f); }

// Word whose letters spell x^alpha in normal order.
GeneratorWord word_of(const ExponentVector& alpha) {
  GeneratorWord w;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const int sign = alpha[k] < 0 ? -1 : 1;
    for (std::int64_t u = 0; u < alpha[k] * sign; ++u) {
      w.push_back({static_cast<int>(k) + 1, sign});
    }
  }
  return w;
}

mpz_class determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a[i][j]);
  }
  // Fraction-free Bareiss elimination.
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// cyclo

void cyclo_field_axioms(Suite& s) {
  for (int t = 0; t < s.trials(); ++t) {
    const int m = uniform(s.rng(), 1, 12);
    const CycNum a = random_cyc(s.rng(), m, true);
    const CycNum b = random_cyc(s.rng(), m);
    const CycNum c = random_cyc(s.rng(), m);
    s.check((a * b) * c == a * (b * c), [&] { return "associativity fails in m=" + std::to_string(m); });
    s.check(a * (b + c) == a * b + a * c, [&] { return "distributivity fails in m=" + std::to_string(m); });
    s.check(a * b == b * a, [&] { return "commutativity fails"; });
    s.check(a * a.inverse() == CycNum::one(m),
            [&] { return "a * a^-1 != 1 for a = " + format_cyc(a) + " in m=" + std::to_string(m); });
  }
}

void cyclo_primitive_roots(Suite& s) {
  for (const auto& config : s.configs()) {
    for (int i = 1; i <= config.r(); ++i) {
      const int n = config.block(i);
      const CycNum z = primitive_root(config, i);
      s.check(z.pow(n).is_one(), [&] { return "zeta_n^n != 1 for " + config.to_string(); });
      for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
          s.check(!z.pow(d).is_one(), [&] { return "zeta_n not primitive for " + config.to_string(); });
        }
      }
    }
  }
}

void cyclo_cyclotomic_product(Suite& s) {
  for (int m = 1; m <= 24; ++m) {
    std::vector<mpz_class> prod{1};
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      const IntPoly phi = cyclotomic_poly(d);
      std::vector<mpz_class> next(prod.size() + phi.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * static_cast<long>(phi[j]);
      }
      prod = std::move(next);
    }
    std::vector<mpz_class> expected(static_cast<std::size_t>(m) + 1, 0);
    expected.front() = -1;
    expected.back() = 1;
    s.check(prod == expected, [&] { return "prod Phi_d != x^m - 1 for m=" + std::to_string(m); });
  }
}

// ---------------------------------------------------------------------------
// twisted

void twisted_cocycle_condition(Suite& s) {
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(1000) / static_cast<int>(s.configs().size()) + 1; ++t) {
      const auto a = random_exponent(s.rng(), config.dim(), -3, 3);
      const auto b = random_exponent(s.rng(), config.dim(), -3, 3);
      const auto c = random_exponent(s.rng(), config.dim(), -3, 3);
      const CycNum lhs = cocycle(config, a, b) * cocycle(config, a + b, c);
      const CycNum rhs = cocycle(config, b, c) * cocycle(config, a, b + c);
      s.check(lhs == rhs, [&] {
        return "cocycle condition fails for " + a.to_string() + b.to_string() + c.to_string();
      });
    }
  }
}

void twisted_word_oracle(Suite& s) {
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(); ++t) {
      const auto a = random_exponent(s.rng(), config.dim(), -3, 3);
      const auto b = random_exponent(s.rng(), config.dim(), -3, 3);
      GeneratorWord w = word_of(a);
      const GeneratorWord wb = word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      const TwistedElement via_cocycle =
          mul(TwistedElement::monomial(config, a), TwistedElement::monomial(config, b));
      s.check(via_cocycle == reduce_word(config, w), [&] {
        return "cocycle disagrees with rewriting for " + a.to_string() + " * " + b.to_string();
      });
    }
  }
}

void twisted_relations(Suite& s) {
  for (const auto& config : s.configs()) {
    std::vector<TwistedElement> xs, ys;
    for (int i = 1; i <= config.r(); ++i) {
      xs.push_back(TwistedElement::generator(config, false, i));
      ys.push_back(TwistedElement::generator(config, true, i));
    }
    for (int i = 0; i < config.r(); ++i) {
      const auto zeta = primitive_root(config, i + 1);
      s.check((xs[i] * ys[i] - (ys[i] * xs[i]).scaled(zeta)).is_zero(),
              [&] { return "x_i y_i != zeta y_i x_i in " + config.to_string(); });
      const CycNum a = random_cyc(s.rng(), config.m(), true);
      const auto scalar = TwistedElement::constant(config, a);
      s.check(scalar * xs[i] == xs[i] * scalar && scalar * ys[i] == ys[i] * scalar,
              [&] { return "scalars not central in " + config.to_string(); });
      for (int j = 0; j < config.r(); ++j) {
        s.check((xs[i] * xs[j] - xs[j] * xs[i]).is_zero(), [&] { return "x_i x_j != x_j x_i"; });
        s.check((ys[i] * ys[j] - ys[j] * ys[i]).is_zero(), [&] { return "y_i y_j != y_j y_i"; });
        if (i != j) {
          s.check((xs[i] * ys[j] - ys[j] * xs[i]).is_zero(), [&] { return "x_i y_j != y_j x_i"; });
        }
      }
    }
  }
}

void twisted_associativity(Suite& s) {
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(100); ++t) {
      const auto f = random_exact(s.rng(), config, 3, -2, 2);
      const auto g = random_exact(s.rng(), config, 3, -2, 2);
      const auto h = random_exact(s.rng(), config, 3, -2, 2);
      s.check(mul(mul(f, g), h) == mul(f, mul(g, h)),
              [&] { return "associativity fails for " + show(f) + ", " + show(g) + ", " + show(h); });
    }
  }
}

void twisted_no_zero_divisors(Suite& s) {
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(200); ++t) {
      const auto f = random_exact(s.rng(), config, 4, -2, 2);
      const auto g = random_exact(s.rng(), config, 4, -2, 2);
      s.check(!mul(f, g).is_zero(), [&] { return "zero product " + show(f) + " * " + show(g); });
    }
  }
}

// ---------------------------------------------------------------------------
// valtheory

void val_axioms(Suite& s) {
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(1000); ++t) {
      const auto f = random_exact(s.rng(), config, 4, -2, 2, true);
      const auto g = random_exact(s.rng(), config, 4, -2, 2, true);
      const auto vf = val(f), vg = val(g);
      s.check(vf.is_infinite() == f.is_zero(), [&] { return "v(f) = inf iff f = 0 fails"; });
      s.check(val(mul(f, g)) == vf + vg,
              [&] { return "v(fg) != v(f) + v(g) for " + show(f) + ", " + show(g); });
      s.check(val(f + g) >= std::min(vf, vg),
              [&] { return "v(f+g) < min for " + show(f) + ", " + show(g); });
    }
  }
}

// Random element of O_D: exact terms with rtl-lex nonnegative exponents.
TwistedElement random_integral(Rng& rng, const AlgebraConfig& config) {
  const auto raw = random_exact(rng, config, 4, -2, 2, true);
  TwistedElement f(config);
  const ExponentVector zero(static_cast<std::size_t>(config.dim()));
  for (const auto& [alpha, c] : raw.terms()) {
    if (rtl_lex_compare(alpha, zero) >= 0) f.add_term(alpha, c);
  }
  if (uniform(rng, 0, 1)) f.add_term(zero, random_cyc(rng, config.m(), true));
  return f;
}

void residue_homomorphism(Suite& s) {
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(200); ++t) {
      const auto f = random_integral(s.rng(), config);
      const auto g = random_integral(s.rng(), config);
      s.check(residue(mul(f, g)) == residue(f) * residue(g),
              [&] { return "residue not multiplicative for " + show(f) + ", " + show(g); });
      s.check(residue(f + g) == residue(f) + residue(g),
              [&] { return "residue not additive for " + show(f) + ", " + show(g); });
    }
  }
}

void kernel_structure(Suite& s) {
  for (const auto& config : s.configs()) {
    const ExponentVector zero(static_cast<std::size_t>(config.dim()));
    for (int t = 0; t < s.trials(200); ++t) {
      TwistedElement f = random_integral(s.rng(), config);
      f.add_term(zero, CycNum::one(config.m()));
      if (f.constant_term().is_zero()) continue;
      const auto split = leading_split(f);
      const TwistedElement rebuilt =
          TwistedElement::constant(config, split.coeff) * (TwistedElement::one(config) + split.tail);
      s.check(split.exponent.is_zero() && !split.coeff.is_zero() && val(split.tail).is_positive() &&
                  rebuilt == f,
              [&] { return "unit " + show(f) + " is not a0 (1 + m_D)"; });
    }
  }
}

TwistedElement random_cone_regular(Rng& rng, const AlgebraConfig& config) {
  const ExponentVector alpha = uniform(rng, 0, 1) ? ExponentVector(static_cast<std::size_t>(config.dim()))
                                                  : random_cone_exponent(rng, config.dim(), 1, 2);
  const auto lead = TwistedElement::monomial(config, alpha, random_cyc(rng, config.m(), true));
  return mul(lead, TwistedElement::one(config) + random_cone_tail(rng, config, 3, 2));
}

void inverse_roundtrip(Suite& s) {
  const int N = 8;
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(200); ++t) {
      const auto f = random_cone_regular(s.rng(), config);
      const auto g = inv(f, N);
      bool ok;
      if (g.is_exact()) {
        const auto one = TwistedElement::one(config);
        ok = mul(f, g).drop_above_degree(N) == one && mul(g, f).drop_above_degree(N) == one;
      } else {
        const auto one = TwistedElement::one(config).truncated(N);
        ok = mul(f, g) == one && mul(g, f) == one;
      }
      s.check(ok, [&] { return "f * inv(f) != 1 mod deg > 8 for f = " + show(f); });
    }
  }
}

void root_roundtrip(Suite& s) {
  const int N = 8;
  const int degrees[] = {2, 3, 5, 6};
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(200); ++t) {
      const int n = degrees[uniform(s.rng(), 0, 3)];
      const auto h = random_cone_tail(s.rng(), config, 2, N / n);
      const auto b = TwistedElement::one(config) + h;
      const auto root = nth_root(pow(b, static_cast<std::uint64_t>(n)), n, N);
      s.check(root == b.truncated(N), [&] {
        return "root of (" + show(b) + ")^" + std::to_string(n) + " gave " + show(root);
      });
    }
  }
}

void central_roots(Suite& s) {
  const int N = 8;
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(50); ++t) {
      TwistedElement a = TwistedElement::one(config);
      const int terms = uniform(s.rng(), 1, 2);
      for (int u = 0; u < terms; ++u) {
        ExponentVector alpha = random_cone_exponent(s.rng(), config.dim(), 1, 2);
        for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] *= config.block(static_cast<int>(k / 2) + 1);
        if (alpha.total_degree() <= N) a.add_term(alpha, random_cyc(s.rng(), config.m(), true));
      }
      const int n = uniform(s.rng(), 2, 4);
      const auto b = nth_root(a, n, N);
      bool central = true;
      for (int i = 1; i <= config.r(); ++i) {
        for (bool is_y : {false, true}) {
          const auto gen = TwistedElement::generator(config, is_y, i);
          central = central && mul(gen, b) == mul(b, gen);
        }
      }
      s.check(central && pow(b, static_cast<std::uint64_t>(n)) == a.truncated(N),
              [&] { return "root of central " + show(a) + " not central"; });
    }
  }
}

// ---------------------------------------------------------------------------
// lattice

void snf_contract(Suite& s) {
  for (int t = 0; t < s.trials(); ++t) {
    const int rows = uniform(s.rng(), 1, 5), cols = uniform(s.rng(), 1, 5);
    IntMatrix m(static_cast<std::size_t>(rows), IntVector(static_cast<std::size_t>(cols)));
    for (auto& row : m) {
      for (auto& x : row) x = uniform(s.rng(), -9, 9);
    }
    const auto f = smith_normal_form(m);
    bool ok = matmul(matmul(f.U, m), f.V) == f.S;
    ok = ok && abs(determinant(f.U)) == 1 && abs(determinant(f.V)) == 1;
    for (std::size_t i = 0; i < f.S.size(); ++i) {
      for (std::size_t j = 0; j < f.S[i].size(); ++j) {
        if (i != j && f.S[i][j] != 0) ok = false;
      }
    }
    const auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i] <= 0 || d[i + 1] % d[i] != 0) ok = false;
    }
    s.check(ok, [&] { return "Smith form contract fails on a " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " matrix"; });
  }
}

void det_product(Suite& s) {
  for (int t = 0; t < s.trials(200); ++t) {
    const int n = uniform(s.rng(), 1, 5);
    IntMatrix m(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n)));
    for (auto& row : m) {
      for (auto& x : row) x = uniform(s.rng(), -9, 9);
    }
    const mpz_class det = abs(determinant(m));
    if (det == 0) continue;
    mpz_class prod = 1;
    for (auto d : smith_normal_form(m).diagonal()) prod *= static_cast<long>(d);
    s.check(prod == det, [&] { return "|det M| != product of invariant factors"; });
  }
}

void center_criterion(Suite& s) {
  const std::vector<AlgebraConfig> configs{AlgebraConfig({2}), AlgebraConfig({2, 3}),
                                           AlgebraConfig({2, 2}), AlgebraConfig({4})};
  for (const auto& config : configs) {
    const auto bound = 2 * config.n();
    const auto dim = static_cast<std::size_t>(config.dim());
    ExponentVector alpha(dim);
    for (std::size_t k = 0; k < dim; ++k) alpha[k] = -bound;
    for (;;) {
      const auto image = quotient_image(config, alpha);
      const bool image_zero = std::all_of(image.begin(), image.end(), [](auto x) { return x == 0; });
      const bool central = is_central_monomial(config, alpha);
      const bool in_lattice = in_center_lattice(config, alpha);
      s.check(image_zero == central && central == in_lattice,
              [&] { return "center criterion fails at " + alpha.to_string(); });
      std::size_t k = 0;
      while (k < dim && alpha[k] == bound) alpha[k++] = -bound;
      if (k == dim) break;
      ++alpha[k];
    }
  }
}

ExponentVector random_center_shift(Rng& rng, const AlgebraConfig& config) {
  ExponentVector shift = random_exponent(rng, config.dim(), -2, 2);
  for (std::size_t k = 0; k < shift.size(); ++k) shift[k] *= config.block(static_cast<int>(k / 2) + 1);
  return shift;
}

void pairing_well_defined(Suite& s) {
  for (const auto& config : s.configs()) {
    for (int t = 0; t < s.trials(200); ++t) {
      const auto a = random_exponent(s.rng(), config.dim(), -5, 5);
      const auto b = random_exponent(s.rng(), config.dim(), -5, 5);
      const auto eps = commutator_pairing(config, a, b);
      s.check(eps == commutator_pairing(config, a + random_center_shift(s.rng(), config),
                                        b + random_center_shift(s.rng(), config)),
              [&] { return "pairing not constant on Gamma_F cosets"; });
      // Against the algebra: x^a x^b = eps x^b x^a.
      const auto xa = TwistedElement::monomial(config, a);
      const auto xb = TwistedElement::monomial(config, b);
      s.check(mul(xa, xb) == mul(xb, xa).scaled(eps.to_cyc()),
              [&] { return "pairing disagrees with the commutator in the algebra"; });
      const auto c = random_exponent(s.rng(), config.dim(), -5, 5);
      const auto sum = commutator_pairing(config, a + c, b);
      s.check(sum.exponent == (eps.exponent + commutator_pairing(config, c, b).exponent) % eps.m,
              [&] { return "pairing not bimultiplicative"; });
      s.check(commutator_pairing(config, a, a).is_trivial(),
              [&] { return "pairing not alternating"; });
    }
  }
}

// Every element of (+)_i (Z_{n_i} + Z_{n_i}) as an exponent vector.
std::vector<ExponentVector> all_classes(const AlgebraConfig& config) {
  const auto dim = static_cast<std::size_t>(config.dim());
  std::vector<ExponentVector> out;
  ExponentVector alpha(dim);
  for (;;) {
    out.push_back(alpha);
    std::size_t k = 0;
    while (k < dim && alpha[k] == config.block(static_cast<int>(k / 2) + 1) - 1) alpha[k++] = 0;
    if (k == dim) break;
    ++alpha[k];
  }
  return out;
}

void pairing_nondegenerate(Suite& s) {
  for (const auto& config : s.configs()) {
    if (config.n() > 64) continue;
    const auto classes = all_classes(config);
    for (const auto& a : classes) {
      if (a.is_zero()) continue;
      bool found = false;
      for (const auto& b : classes) {
        if (!commutator_pairing(config, a, b).is_trivial()) {
          found = true;
          break;
        }
      }
      s.check(found, [&] { return "class " + a.to_string() + " pairs trivially with everything"; });
    }
  }
}

void rank_monotonicity(Suite& s) {
  for (int t = 0; t < s.trials(200); ++t) {
    const int d = uniform(s.rng(), 1, 4);
    IntegerLattice outer{d, {}};
    const int gens = uniform(s.rng(), d, d + 2);
    for (int g = 0; g < gens; ++g) {
      IntVector v(static_cast<std::size_t>(d));
      for (auto& x : v) x = uniform(s.rng(), -6, 6);
      outer.gens.push_back(v);
    }
    // inner = random integer combinations of the outer generators
    IntegerLattice inner{d, {}};
    for (int g = 0; g < gens; ++g) {
      IntVector v(static_cast<std::size_t>(d), 0);
      for (const auto& og : outer.gens) {
        const int c = uniform(s.rng(), -3, 3);
        for (int k = 0; k < d; ++k) v[static_cast<std::size_t>(k)] += c * og[static_cast<std::size_t>(k)];
      }
      inner.gens.push_back(v);
    }
    // Z^d/outer is a quotient of Z^d/inner.
    s.check(rank(quotient_type(d, outer)) <= rank(quotient_type(d, inner)),
            [&] { return "rank of a quotient exceeds the rank of the group"; });
  }
}

void quotient_order(Suite& s) {
  for (const auto& config : s.configs()) {
    const auto type = quotient_type(config.dim(), center_value_lattice(config));
    const auto order = type.order();
    s.check(order && *order == config.n() * config.n(),
            [&] { return "|Gamma_D/Gamma_F| != n^2 for " + config.to_string(); });
  }
}

// ---------------------------------------------------------------------------
// obstruct

void cube_boundary(Suite& s) {
  for (std::int64_t n = 2; n <= 1000; ++n) {
    bool cube = false;
    for (std::int64_t p = 2; p * p * p <= n; ++p) {
      bool prime = true;
      for (std::int64_t q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
      if (prime && n % (p * p * p) == 0) cube = true;
    }
    const auto v = obstruction(n, 0);
    s.check((v.verdict == Verdict::kNoncrossed) == cube,
            [&] { return "obstruction(" + std::to_string(n) + ", 0) disagrees with cube test"; });
    std::map<std::int64_t, int> mult;
    for (auto p : v.certificate.factorization) ++mult[p];
    int max_mult = 0;
    for (auto [p, k] : mult) max_mult = std::max(max_mult, k);
    s.check(v.certificate.forced_rank == max_mult,
            [&] { return "rank(G) != max multiplicity for n = " + std::to_string(n); });
  }
}

void witness_consistency(Suite& s) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    const auto [d1, d2] = witness_configs(n);
    s.check(d1.n() == n && d2.n() == n && d2.r() == 1 && d1.m() == n && d2.m() == n,
            [&] { return "witness blocks inconsistent for n = " + std::to_string(n); });
    s.check(rank(quotient_type(d2.dim(), center_value_lattice(d2))) == 2,
            [&] { return "rank(Z_n + Z_n) != 2 for n = " + std::to_string(n); });
  }
}

// ---------------------------------------------------------------------------
// cli

void parser_roundtrip(Suite& s) {
  for (int t = 0; t < s.trials(); ++t) {
    const auto& configs = s.configs();
    const auto& config = configs[static_cast<std::size_t>(uniform(s.rng(), 0, static_cast<int>(configs.size()) - 1))];
    const auto f = random_exact(s.rng(), config, 4, -3, 3, true);
    const std::string text = format_element(f);
    const auto back = parse_element(text, config);
    s.check(back == f && format_element(back) == text,
            [&] { return "round-trip fails for '" + text + "'"; });
  }
}

void json_text_agreement(Suite& s) {
  for (int t = 0; t < s.trials(100); ++t) {
    const auto& configs = s.configs();
    const auto& config = configs[static_cast<std::size_t>(uniform(s.rng(), 0, static_cast<int>(configs.size()) - 1))];
    auto f = random_exact(s.rng(), config, 4, 0, 3, true);
    if (uniform(s.rng(), 0, 1)) f = f.truncated(4);
    const auto j = to_json(f);
    s.check(j.at("text") == format_element(f) && element_from_json(j, config) == f,
            [&] { return "json and text disagree for '" + format_element(f) + "'"; });
  }
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  const std::vector<AlgebraConfig> configs =
      options.configs.empty() ? default_verify_configs() : options.configs;
  const std::vector<std::pair<const char*, void (*)(Suite&)>> suites{
      {"cyclo.field_axioms", cyclo_field_axioms},
      {"cyclo.primitive_roots", cyclo_primitive_roots},
      {"cyclo.cyclotomic_product", cyclo_cyclotomic_product},
      {"twisted.cocycle_condition", twisted_cocycle_condition},
      {"twisted.word_oracle", twisted_word_oracle},
      {"twisted.relations", twisted_relations},
      {"twisted.associativity", twisted_associativity},
      {"twisted.no_zero_divisors", twisted_no_zero_divisors},
      {"valtheory.valuation_axioms", val_axioms},
      {"valtheory.residue_homomorphism", residue_homomorphism},
      {"valtheory.kernel_structure", kernel_structure},
      {"valtheory.inverse_roundtrip", inverse_roundtrip},
      {"valtheory.root_roundtrip", root_roundtrip},
      {"valtheory.central_roots", central_roots},
      {"lattice.snf_contract", snf_contract},
      {"lattice.det_product", det_product},
      {"lattice.center_criterion", center_criterion},
      {"lattice.pairing_well_defined", pairing_well_defined},
      {"lattice.pairing_nondegenerate", pairing_nondegenerate},
      {"lattice.rank_monotonicity", rank_monotonicity},
      {"lattice.quotient_order", quotient_order},
      {"obstruct.cube_boundary", cube_boundary},
      {"obstruct.witness_consistency", witness_consistency},
      {"cli.parser_roundtrip", parser_roundtrip},
      {"cli.json_text_agreement", json_text_agreement},
  };
  std::vector<SuiteResult> results;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Suite suite(suites[i].first, options.seed * 0x9E3779B97F4A7C15ULL + i, options.trials, configs);
    try {
      suites[i].second(suite);
    } catch (const std::exception& e) {
      suite.fail(std::string("exception: ") + e.what());
    }
    results.push_back(suite.result());
  }
  return results;
}

}  // namespace noncross
