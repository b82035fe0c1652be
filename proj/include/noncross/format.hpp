#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "noncross/cyclo.hpp"
#include "noncross/lattice.hpp"
#include "noncross/obstruct.hpp"
#include "noncross/twisted.hpp"
#include "noncross/valtheory.hpp"

namespace noncross {

/// "p/q", denominator omitted when 1.
std::string format_rational(const Rational& q);

/// Polynomial in z with ascending powers, e.g. "1/2 - z + 3*z^2"; "0" for zero.
std::string format_cyc(const CycNum& c);

/// Canonical text of an element: terms ascending in rtl-lex order, each
/// "<coeff>*x1^a*y1^b*...", rational coefficients folded into the signs,
/// other coefficients parenthesized. Parses back to the same element.
std::string format_element(const TwistedElement& f);

nlohmann::json to_json(const CycNum& c);
nlohmann::json to_json(const TwistedElement& f);
nlohmann::json to_json(const ValuationResult& v);
nlohmann::json to_json(const AbelianGroupType& t);
nlohmann::json to_json(const AlgebraConfig& c);
nlohmann::json to_json(const ObstructionVerdict& v);

/// Rebuilds an element from to_json(f) output.
TwistedElement element_from_json(const nlohmann::json& j, const AlgebraConfig& config);

}  // namespace noncross
