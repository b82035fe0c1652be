#include "noncross/random.hpp"

namespace noncross {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Rational random_rational(Rng& rng, bool nonzero) {
  int num = 0;
  do {
    num = uniform(rng, -5, 5);
  } while (nonzero && num == 0);
  Rational q(num, uniform(rng, 1, 4));
  q.canonicalize();
  return q;
}

CycNum random_cyc(Rng& rng, int m, bool nonzero) {
  const int phi = euler_phi(m);
  for (;;) {
    std::vector<Rational> coeffs;
    // Mostly rational coefficients, sometimes a full field element.
    const bool full = uniform(rng, 0, 2) == 0;
    for (int t = 0; t < phi; ++t) {
      coeffs.push_back(t == 0 || full ? random_rational(rng) : Rational(0));
    }
    CycNum c = CycNum::from_coeffs(m, coeffs);
    if (!nonzero || !c.is_zero()) return c;
  }
}

ExponentVector random_exponent(Rng& rng, int dim, int lo, int hi) {
  ExponentVector alpha(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) alpha[static_cast<std::size_t>(k)] = uniform(rng, lo, hi);
  return alpha;
}

ExponentVector random_cone_exponent(Rng& rng, int dim, int min_degree, int max_degree) {
  ExponentVector alpha(static_cast<std::size_t>(dim));
  const int degree = uniform(rng, min_degree, max_degree);
  for (int u = 0; u < degree; ++u) alpha[static_cast<std::size_t>(uniform(rng, 0, dim - 1))] += 1;
  return alpha;
}

TwistedElement random_exact(Rng& rng, const AlgebraConfig& config, int max_terms, int lo, int hi,
                            bool allow_zero) {
  for (;;) {
    TwistedElement f(config);
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      f.add_term(random_exponent(rng, config.dim(), lo, hi), random_cyc(rng, config.m(), true));
    }
    if (allow_zero || !f.is_zero()) return f;
  }
}

TwistedElement random_cone_tail(Rng& rng, const AlgebraConfig& config, int max_terms,
                                int max_degree) {
  for (;;) {
    TwistedElement f(config);
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      f.add_term(random_cone_exponent(rng, config.dim(), 1, max_degree),
                 random_cyc(rng, config.m(), true));
    }
    if (!f.is_zero()) return f;
  }
}

}  // namespace noncross
