#include "noncross/expr.hpp"

#include <cctype>
#include <limits>

#include "noncross/error.hpp"

namespace noncross {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
Expr make(T node) {
  return std::make_shared<const ExprNode>(ExprNode{std::move(node)});
}

class Parser {
 public:
  Parser(std::string_view input, const AlgebraConfig& config) : in_(input), config_(config) {}

  Expr parse_all() {
    Expr e = expr();
    skip_ws();
    if (pos_ != in_.size()) fail("'+', '-', '*' or end of input");
    return e;
  }

 private:
  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        lhs = make(ast::Add{lhs, term()});
      } else if (accept('-')) {
        lhs = make(ast::Sub{lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip_ws();
      if (!accept('*')) return lhs;
      lhs = make(ast::Mul{lhs, unary()});
    }
  }

  Expr unary() {
    skip_ws();
    if (accept('-')) return make(ast::Neg{unary()});
    return factor();
  }

  Expr factor() {
    const std::size_t start = pos_;
    Expr b = base();
    skip_ws();
    if (!accept('^')) return b;
    skip_ws();
    const bool negative = accept('-');
    skip_ws();
    const std::string digits = uint_digits("exponent");
    std::int64_t e = 0;
    try {
      e = std::stoll(digits);
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::kParse, where(start) + "exponent out of range");
    }
    if (negative) {
      e = -e;
      if (!eval(b, config_).is_single_term()) {
        throw Error(ErrorCode::kNonunitPow,
                    where(start) +
                        "negative power of a non-monomial base; use the inv command instead");
      }
    }
    return make(ast::Pow{b, e});
  }

  Expr base() {
    skip_ws();
    if (pos_ >= in_.size()) fail("number, 'z', variable or '('");
    const char c = in_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == 'z') {
      ++pos_;
      return make(ast::Zeta{});
    }
    if (c == 'x' || c == 'y') {
      const std::size_t start = pos_++;
      const std::string digits = uint_digits("variable index");
      int index = 0;
      if (digits.size() > 9 || (index = std::stoi(digits)) < 1 || index > config_.r()) {
        throw Error(ErrorCode::kBadIndex, where(start) + "variable " + c + digits +
                                              " outside 1.." + std::to_string(config_.r()));
      }
      return make(ast::Var{c == 'y', index});
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      skip_ws();
      if (!accept(')')) fail("')'");
      return inner;
    }
    fail("number, 'z', variable or '('");
  }

  Expr rational() {
    const std::size_t start = pos_;
    mpz_class num(uint_digits("number"));
    mpz_class den = 1;
    skip_ws();
    if (accept('/')) {
      skip_ws();
      den = mpz_class(uint_digits("denominator"));
      if (den == 0) {
        throw Error(ErrorCode::kDivisionByZero, where(start) + "zero denominator");
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return make(ast::RationalLit{q});
  }

  std::string uint_digits(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    if (start == pos_) fail(what);
    return std::string(in_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string where(std::size_t p) const { return "at position " + std::to_string(p + 1) + ": "; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < in_.size() ? "'" + std::string(1, in_[pos_]) + "'" : "end of input";
    throw Error(ErrorCode::kParse, where(pos_) + "expected " + expected + ", found " + found);
  }

  std::string_view in_;
  const AlgebraConfig& config_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view input, const AlgebraConfig& config) {
  return Parser(input, config).parse_all();
}

TwistedElement eval(const Expr& expr, const AlgebraConfig& config) {
  return std::visit(
      Overloaded{
          [&](const ast::RationalLit& n) { return TwistedElement::constant(config, n.value); },
          [&](const ast::Zeta&) {
            return TwistedElement::constant(config, CycNum::zeta_power(config.m(), 1));
          },
          [&](const ast::Var& v) { return TwistedElement::generator(config, v.is_y, v.index); },
          [&](const ast::Neg& n) { return -eval(n.operand, config); },
          [&](const ast::Add& n) { return eval(n.lhs, config) + eval(n.rhs, config); },
          [&](const ast::Sub& n) { return eval(n.lhs, config) - eval(n.rhs, config); },
          [&](const ast::Mul& n) { return mul(eval(n.lhs, config), eval(n.rhs, config)); },
          [&](const ast::Pow& n) {
            TwistedElement b = eval(n.base, config);
            if (n.exponent >= 0) return pow(b, static_cast<std::uint64_t>(n.exponent));
            if (!b.is_single_term()) {
              throw Error(ErrorCode::kNonunitPow, "negative power of a non-monomial base");
            }
            const auto& [alpha, a] = *b.terms().begin();
            return pow(monomial_inverse(config, alpha, a),
                       static_cast<std::uint64_t>(-(n.exponent + 1)) + 1);
          },
      },
      expr->node);
}

TwistedElement parse_element(std::string_view input, const AlgebraConfig& config) {
  return eval(parse(input, config), config);
}

std::string dump(const Expr& expr) {
  return std::visit(
      Overloaded{
          [](const ast::RationalLit& n) { return "Rational " + n.value.get_str(); },
          [](const ast::Zeta&) { return std::string("Zeta"); },
          [](const ast::Var& v) {
            return std::string("Var ") + (v.is_y ? "y" : "x") + std::to_string(v.index);
          },
          [](const ast::Neg& n) { return "Neg(" + dump(n.operand) + ")"; },
          [](const ast::Add& n) { return "Add(" + dump(n.lhs) + ", " + dump(n.rhs) + ")"; },
          [](const ast::Sub& n) { return "Sub(" + dump(n.lhs) + ", " + dump(n.rhs) + ")"; },
          [](const ast::Mul& n) { return "Mul(" + dump(n.lhs) + ", " + dump(n.rhs) + ")"; },
          [](const ast::Pow& n) {
            return "Pow(" + dump(n.base) + ", " + std::to_string(n.exponent) + ")";
          },
      },
      expr->node);
}

}  // namespace noncross
