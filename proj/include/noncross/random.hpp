#pragma once

#include <random>

#include "noncross/cyclo.hpp"
#include "noncross/twisted.hpp"

namespace noncross {

using Rng = std::mt19937_64;

/// Small rational with |numerator| <= 5 and denominator in 1..4.
Rational random_rational(Rng& rng, bool nonzero = false);
CycNum random_cyc(Rng& rng, int m, bool nonzero = false);
/// Entries uniform in [lo, hi].
ExponentVector random_exponent(Rng& rng, int dim, int lo, int hi);
/// Nonnegative vector of total degree in [min_degree, max_degree].
ExponentVector random_cone_exponent(Rng& rng, int dim, int min_degree, int max_degree);

/// EXACT element with 1..max_terms terms, exponents in [lo, hi]. May be zero
/// only if allow_zero.
TwistedElement random_exact(Rng& rng, const AlgebraConfig& config, int max_terms, int lo, int hi,
                            bool allow_zero = false);

/// EXACT cone-supported element with 1..max_terms terms of total degree in
/// [1, max_degree] and no constant term.
TwistedElement random_cone_tail(Rng& rng, const AlgebraConfig& config, int max_terms,
                                int max_degree);

}  // namespace noncross
