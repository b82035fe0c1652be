#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "noncross/config.hpp"
#include "noncross/cyclo.hpp"
#include "noncross/twisted.hpp"

namespace noncross {

// Grammar (whitespace insignificant, '*' mandatory):
//   expr     := term (('+'|'-') term)*
//   term     := unary ('*' unary)*
//   unary    := '-' unary | factor
//   factor   := base ('^' sint)?
//   base     := rational | 'z' | var | '(' expr ')'
//   var      := ('x'|'y') uint
//   rational := uint ('/' uint)?
//   sint     := '-'? uint

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

namespace ast {
struct RationalLit {
  Rational value;
};
struct Zeta {};
struct Var {
  bool is_y = false;
  int index = 1;
};
struct Neg {
  Expr operand;
};
struct Add {
  Expr lhs, rhs;
};
struct Sub {
  Expr lhs, rhs;
};
struct Mul {
  Expr lhs, rhs;
};
struct Pow {
  Expr base;
  std::int64_t exponent = 1;
};
}  // namespace ast

struct ExprNode {
  std::variant<ast::RationalLit, ast::Zeta, ast::Var, ast::Neg, ast::Add, ast::Sub, ast::Mul,
               ast::Pow>
      node;
};

/// Parses `input` against the generators of `config`.
/// Errors: kParse (with position), kBadIndex, kNonunitPow.
Expr parse(std::string_view input, const AlgebraConfig& config);

/// Evaluates to an EXACT element.
TwistedElement eval(const Expr& expr, const AlgebraConfig& config);

/// parse + eval.
TwistedElement parse_element(std::string_view input, const AlgebraConfig& config);

/// Structural dump, e.g. "Add(Mul(Var x1, Var y1), Rational 2)".
std::string dump(const Expr& expr);

}  // namespace noncross
