#include <gtest/gtest.h>

#include <sstream>

#include "noncross/cli.hpp"
#include "noncross/error.hpp"
#include "noncross/expr.hpp"
#include "noncross/format.hpp"
#include "noncross/random.hpp"

namespace noncross {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorCode parse_error(const char* text, const AlgebraConfig& config) {
  try {
    (void)parse_element(text, config);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(Parse, Dump) {
  const AlgebraConfig c2({2});
  EXPECT_EQ(dump(parse("x1*y1 + 2", c2)), "Add(Mul(Var x1, Var y1), Rational 2)");
  EXPECT_EQ(dump(parse("x1^-2", c2)), "Pow(Var x1, -2)");
}

TEST(Parse, Errors) {
  const AlgebraConfig c2({2});
  EXPECT_EQ(parse_error("(1+x1)^-1", c2), ErrorCode::kNonunitPow);
  EXPECT_EQ(parse_error("x2", c2), ErrorCode::kBadIndex);
  EXPECT_EQ(parse_error("x0", c2), ErrorCode::kBadIndex);
  EXPECT_EQ(parse_error("x1 +", c2), ErrorCode::kParse);
  EXPECT_EQ(parse_error("x1 y1", c2), ErrorCode::kParse);
  EXPECT_EQ(parse_error("(x1", c2), ErrorCode::kParse);
  EXPECT_EQ(parse_error("w", c2), ErrorCode::kParse);
  EXPECT_EQ(parse_error("1/0", c2), ErrorCode::kDivisionByZero);
  EXPECT_EQ(exit_code_for(ErrorCode::kNonunitPow), 2);
  EXPECT_EQ(exit_code_for(ErrorCode::kNotConeRegular), 1);
}

TEST(Eval, Examples) {
  const AlgebraConfig c2({2});
  EXPECT_TRUE(parse_element("x1*y1 - z*y1*x1", c2).is_zero());
  EXPECT_EQ(parse_element("2/3", c2), TwistedElement::constant(c2, Rational(2, 3)));
  EXPECT_EQ(parse_element("y1*x1", c2), TwistedElement::monomial(c2, {1, 1}, CycNum::from_rational(2, -1)));
  EXPECT_EQ(parse_element("(2*x1*y1)^-1", c2) * parse_element("2*x1*y1", c2), TwistedElement::one(c2));
  const AlgebraConfig c3({3});
  EXPECT_EQ(parse_element("z^3", c3), TwistedElement::one(c3));
}

TEST(Format, Examples) {
  const AlgebraConfig c2({2});
  EXPECT_EQ(format_element(parse_element("(x1+y1)*(x1-y1)", c2)), "x1^2 - 2*x1*y1 - y1^2");
  EXPECT_EQ(format_element(parse_element("y1*x1", c2)), "-x1*y1");
  EXPECT_EQ(format_element(TwistedElement::zero(c2)), "0");
  EXPECT_EQ(format_cyc(CycNum::from_coeffs(4, std::vector<Rational>{Rational(1, 2), -1})), "1/2 - z");
}

TEST(Format, RoundTripRandom) {
  Rng rng(41);
  for (const auto& blocks : std::vector<std::vector<int>>{{2}, {3}, {2, 3}, {4, 2}}) {
    const AlgebraConfig config(blocks);
    for (int t = 0; t < 150; ++t) {
      const auto f = random_exact(rng, config, 5, -3, 3, true);
      const std::string text = format_element(f);
      const auto g = parse_element(text, config);
      ASSERT_EQ(g, f) << text;
      ASSERT_EQ(format_element(g), text);
      ASSERT_EQ(element_from_json(to_json(f), config), f);
    }
  }
}

TEST(Cli, SpecExamples) {
  auto r = run({"val", "--blocks", "2", "x1 + y1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1,0)\n");

  r = run({"root", "--blocks", "2", "--n", "2", "--prec", "3", "1 + x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + 1/2*x1 - 1/8*x1^2 + 1/16*x1^3\n");

  r = run({"obstruction", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("NONCROSSED\n", 0), 0u);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"normalize", "--blocks", "2", "y1*x1"}).out, "-x1*y1\n");
  EXPECT_EQ(run({"residue", "--blocks", "2", "(1+x1)*(2+y1)"}).out, "2\n");
  EXPECT_EQ(run({"inv", "--blocks", "2", "--prec", "4", "1 - x1*y1"}).out, "1 + x1*y1 - x1^2*y1^2\n");
  EXPECT_EQ(run({"image", "--blocks", "2,3", "1,2,4,5"}).out, "(1,0,1,2)\n");
  EXPECT_EQ(run({"central", "--blocks", "2", "2,0"}).out, "true\n");
  EXPECT_EQ(run({"central", "--blocks", "2", "1,0"}).out, "false\n");
  EXPECT_EQ(run({"pairing", "--blocks", "2", "1,0", "0,1"}).out, "zeta_2^1 = -1\n");
  EXPECT_EQ(run({"grouptype", "--blocks", "2,3"}).out, "Z_1 + Z_1 + Z_6 + Z_6 (rank 2, order 36)\n");
  const auto snf = run({"snf", "2,4;6,8"});
  EXPECT_EQ(snf.code, 0);
  EXPECT_EQ(snf.out.rfind("invariant factors: 2,4\n", 0), 0u);
  EXPECT_EQ(run({"obstruction", "12"}).out.rfind("INCONCLUSIVE\n", 0), 0u);
  EXPECT_EQ(run({"obstruction", "8", "--char", "2"}).out.rfind("INAPPLICABLE\n", 0), 0u);
}

TEST(Cli, ExitCodes) {
  auto r = run({"normalize", "--blocks", "2", "(1+x1)^-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("E_NONUNIT_POW", 0), 0u);
  r = run({"inv", "--blocks", "2", "x1 + y1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("E_NOT_CONE_REGULAR", 0), 0u);
  EXPECT_EQ(run({"normalize", "--blocks", "2", "x3"}).code, 2);
  EXPECT_EQ(run({"residue", "--blocks", "2", "y1^-1"}).code, 1);
  EXPECT_EQ(run({"normalize", "x1"}).code, 3);
  EXPECT_EQ(run({"normalize", "--blocks", "1", "x1"}).code, 3);
  EXPECT_EQ(run({"bogus"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonAgreesWithText) {
  const auto text = run({"normalize", "--blocks", "2,3", "(x1 + z*y2)^2"});
  const auto js = run({"normalize", "--blocks", "2,3", "--json", "(x1 + z*y2)^2"});
  ASSERT_EQ(js.code, 0);
  const auto j = nlohmann::json::parse(js.out);
  const AlgebraConfig c({2, 3});
  EXPECT_EQ(format_element(element_from_json(j.at("element"), c)) + "\n", text.out);

  const auto val_js = nlohmann::json::parse(run({"val", "--json", "--blocks", "2", "x1 + y1"}).out);
  EXPECT_EQ(val_js.at("text"), "(1,0)");
  const auto obs = nlohmann::json::parse(run({"obstruction", "--json", "27"}).out);
  EXPECT_EQ(obs.at("verdict"), "NONCROSSED");
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run({"verify", "--seed", "5", "--trials", "20"});
  const auto b = run({"verify", "--seed", "5", "--trials", "20"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all suites passed"), std::string::npos);
}

TEST(Cli, MatrixHelpers) {
  EXPECT_EQ(parse_matrix("2,0;0,3"), (IntMatrix{{2, 0}, {0, 3}}));
  EXPECT_EQ(format_matrix({{2, 0}, {0, 3}}), "2,0;0,3");
  EXPECT_THROW(parse_matrix("1,2;3"), Error);
  EXPECT_EQ(parse_exponent("1, -2"), (ExponentVector{1, -2}));
}

}  // namespace
}  // namespace noncross
