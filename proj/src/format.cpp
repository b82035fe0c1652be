#include "noncross/format.hpp"

#include "noncross/error.hpp"
#include "noncross/expr.hpp"

namespace noncross {

namespace {

using nlohmann::json;

struct SignedPiece {
  bool negative = false;
  std::string body;
};

// Rational coefficient q times a (possibly empty) monomial text.
SignedPiece rational_piece(const Rational& q, const std::string& mono) {
  SignedPiece piece{q < 0, {}};
  const Rational mag = abs(q);
  if (mono.empty()) {
    piece.body = format_rational(mag);
  } else if (mag == 1) {
    piece.body = mono;
  } else {
    piece.body = format_rational(mag) + "*" + mono;
  }
  return piece;
}

std::string join_pieces(const std::vector<SignedPiece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      out += pieces[i].negative ? "-" : "";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

std::string monomial_text(const ExponentVector& alpha) {
  std::string out;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += (k % 2 == 0 ? "x" : "y") + std::to_string(k / 2 + 1);
    if (alpha[k] != 1) out += "^" + std::to_string(alpha[k]);
  }
  return out;
}

}  // namespace

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_cyc(const CycNum& c) {
  std::vector<SignedPiece> pieces;
  const auto& coeffs = c.coeffs();
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t] == 0) continue;
    const std::string mono = t == 0 ? "" : t == 1 ? "z" : "z^" + std::to_string(t);
    pieces.push_back(rational_piece(coeffs[t], mono));
  }
  return join_pieces(pieces);
}

std::string format_element(const TwistedElement& f) {
  std::vector<SignedPiece> pieces;
  for (const auto& [alpha, c] : f.terms()) {
    const std::string mono = monomial_text(alpha);
    if (c.is_rational()) {
      pieces.push_back(rational_piece(c.rational_part(), mono));
    } else {
      SignedPiece piece{false, "(" + format_cyc(c) + ")"};
      if (!mono.empty()) piece.body += "*" + mono;
      pieces.push_back(std::move(piece));
    }
  }
  return join_pieces(pieces);
}

json to_json(const CycNum& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(format_rational(q));
  return json{{"text", format_cyc(c)}, {"m", c.order()}, {"coeffs", coeffs}};
}

json to_json(const TwistedElement& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms()) {
    terms.push_back(json{{"exponent", alpha.entries()}, {"coeff", to_json(c)}});
  }
  json out{{"text", format_element(f)},
           {"mode", f.is_exact() ? "exact" : "truncated"},
           {"terms", terms}};
  out["precision"] = f.precision() ? json(*f.precision()) : json(nullptr);
  return out;
}

json to_json(const ValuationResult& v) {
  if (v.is_infinite()) return json{{"infinite", true}, {"value", nullptr}};
  return json{{"infinite", false}, {"value", v.value().entries()}};
}

json to_json(const AbelianGroupType& t) {
  json out{{"invariant_factors", t.invariant_factors},
           {"free_rank", t.free_rank},
           {"rank", rank(t)},
           {"text", t.to_string()}};
  const auto order = t.order();
  out["order"] = order ? json(std::to_string(*order)) : json(nullptr);
  return out;
}

json to_json(const AlgebraConfig& c) {
  return json{{"blocks", std::vector<int>(c.blocks().begin(), c.blocks().end())},
              {"n", c.n()},
              {"m", c.m()}};
}

json to_json(const ObstructionVerdict& v) {
  const auto& cert = v.certificate;
  json out{{"verdict", verdict_name(v.verdict)},
           {"n", cert.n},
           {"char", cert.characteristic},
           {"factorization", cert.factorization},
           {"forced_group", to_json(cert.forced_group)},
           {"rank_G", cert.forced_rank},
           {"d2_rank_bound", cert.second_witness_bound},
           {"inequality_chain", cert.trail}};
  out["cube_prime"] = cert.cube_prime ? json(*cert.cube_prime) : json(nullptr);
  out["witnesses"] = json{{"D1", to_json(*cert.first_witness)},
                          {"D2", to_json(*cert.second_witness)}};
  return out;
}

TwistedElement element_from_json(const json& j, const AlgebraConfig& config) {
  TwistedElement out(config);
  for (const auto& term : j.at("terms")) {
    ExponentVector alpha(term.at("exponent").get<std::vector<std::int64_t>>());
    std::vector<Rational> coeffs;
    for (const auto& s : term.at("coeff").at("coeffs")) {
      Rational q(s.get<std::string>());
      q.canonicalize();
      coeffs.push_back(q);
    }
    out.add_term(alpha, CycNum::from_coeffs(config.m(), coeffs));
  }
  if (!j.at("precision").is_null()) out = out.truncated(j.at("precision").get<int>());
  return out;
}

}  // namespace noncross
