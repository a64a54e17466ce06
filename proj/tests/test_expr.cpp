#include <gtest/gtest.h>

#include "complement/formulas.hpp"
#include "random_expr.hpp"

namespace complement {
namespace {

const Expr x = Expr::var();
Expr num(long v) { return Expr::number(v); }
Expr ratio(long p, long q) { return Expr::number(Rational(p, q)); }

TEST(Parse, SquareRootPlusHalf) {
  EXPECT_EQ(parse("sqrt(x) + 1/2"), Expr::sqrt(x) + ratio(1, 2));
}

TEST(Parse, FibonacciPsi) {
  const Expr sqrt5 = Expr::sqrt(num(5));
  const Expr inner = sqrt5 * (Expr::log(Expr::phi(), sqrt5 * x) + x) - num(5) + num(3) / x;
  const Expr expected = Expr::log(Expr::phi(), inner) - num(2);
  EXPECT_EQ(parse("log(phi, sqrt(5)*(log(phi, sqrt(5)*x) + x) - 5 + 3/x) - 2"), expected);
}

TEST(Parse, VariableInLogBaseIsSemanticError) {
  try {
    parse("log(x, 2)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_EQ(e.found(), "x");
    EXPECT_EQ(e.expected(), "constant logarithm base");
  }
  EXPECT_THROW(parse("log(2*x + 1, 2)"), ParseError);
}

TEST(Parse, Precedence) {
  EXPECT_EQ(parse("1 + 2*x"), num(1) + num(2) * x);
  EXPECT_EQ(parse("x - 1 - 2"), (x - num(1)) - num(2));
  EXPECT_EQ(parse("-x^2"), -Expr::pow(x, 2));
  EXPECT_EQ(parse("2 * -x"), num(2) * -x);
  EXPECT_EQ(parse("x^(1/2)"), Expr::pow(x, Rational(1, 2)));
  EXPECT_EQ(parse("x^-2"), Expr::pow(x, -2));
  EXPECT_EQ(parse("x^(-3/4)"), Expr::pow(x, Rational(-3, 4)));
  EXPECT_EQ(parse("x^1/2"), Expr::pow(x, 1) / num(2));
  EXPECT_EQ(parse("(x + 1)^3"), Expr::pow(x + num(1), 3));
}

TEST(Parse, RationalLiterals) {
  EXPECT_EQ(parse("6/4"), ratio(3, 2));
  EXPECT_EQ(parse("6 / 4"), num(6) / num(4));
  EXPECT_EQ(parse("x/2/3"), (x / num(2)) / num(3));
  EXPECT_EQ(parse("3/x"), num(3) / x);
  EXPECT_EQ(parse("0.25"), ratio(1, 4));
  EXPECT_EQ(parse("12.50"), ratio(25, 2));
}

TEST(Parse, Functions) {
  EXPECT_EQ(parse("cbrt(x)"), Expr::root(3, x));
  EXPECT_EQ(parse("root(5, x)"), Expr::root(5, x));
  EXPECT_EQ(parse("ln(phi)"), Expr::ln(Expr::phi()));
  EXPECT_EQ(parse("log(10, x)"), Expr::log(num(10), x));
  EXPECT_NE(parse("root(2, x)"), parse("sqrt(x)"));
}

TEST(Parse, Errors) {
  const char* bad[] = {
      "",        "x +",        "(x",          "x)",         "sqrt x",    "sqrt(x, 2)", "root(1, x)",
      "root(x, 2)", "root(2.5, x)", "log(2)",   "ln()",       "foo(x)",    "y",          "x ^ x",
      "x^2^3",   "1/0",        "1.",          "x $ 2",      "--x",       "x^(1/2",     "phi(2)",
  };
  for (const char* text : bad) {
    try {
      parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_LE(e.position(), std::string_view(text).size()) << text;
    }
  }
}

TEST(Parse, ErrorReportsPositionAndToken) {
  try {
    parse("sqrt(x) + foo(2)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
    EXPECT_EQ(e.found(), "foo");
    EXPECT_NE(std::string(e.what()).find("offset 10"), std::string::npos);
  }
}

TEST(Parse, NestingLimit) {
  std::string deep(10000, '(');
  deep += "x";
  deep += std::string(10000, ')');
  EXPECT_THROW(parse(deep), ParseError);
}

TEST(Print, Examples) {
  EXPECT_EQ(print(x + num(1)), "(x + 1)");
  EXPECT_EQ(print(Expr::sqrt(num(5))), "sqrt(5)");
  EXPECT_EQ(print(builtin_formula(Builtin::Squares).psi), "(sqrt(x) + (1/2))");
  EXPECT_EQ(print(Expr::pow(x, Rational(-1, 2))), "(x^(-1/2))");
  EXPECT_EQ(print(Expr::root(3, x) / num(2)), "(root(3, x) / 2)");
  EXPECT_EQ(print(Expr::log(Expr::phi(), -x)), "log(phi, (-x))");
}

TEST(FreeVarCount, Examples) {
  EXPECT_EQ(free_var_count(x), 1);
  EXPECT_EQ(free_var_count(num(3)), 0);
  EXPECT_EQ(free_var_count(x + x), 1);
  EXPECT_EQ(free_var_count(Expr::log(Expr::phi(), num(2))), 0);
}

TEST(Builtins, DocumentationStringsParseToConstructedAsts) {
  const std::pair<Builtin, unsigned long> cases[] = {
      {Builtin::Squares, 0},   {Builtin::Cubes, 0},     {Builtin::RthPowers, 2},
      {Builtin::RthPowers, 7}, {Builtin::PowersOf, 2},  {Builtin::PowersOf, 10},
      {Builtin::Triangular, 0}, {Builtin::Fibonacci, 0},
  };
  for (const auto& [kind, param] : cases) {
    const auto text = builtin_psi_text(kind, param);
    EXPECT_EQ(parse(text), builtin_formula(kind, param).psi) << text;
  }
}

TEST(Builtins, StartingIndices) {
  EXPECT_EQ(builtin_formula(Builtin::Squares).n0, 1);
  EXPECT_EQ(builtin_formula(Builtin::Cubes).n0, 1);
  EXPECT_EQ(builtin_formula(Builtin::RthPowers, 4).n0, 1);
  EXPECT_EQ(builtin_formula(Builtin::Triangular).n0, 1);
  EXPECT_EQ(builtin_formula(Builtin::PowersOf, 3).n0, 2);
  EXPECT_EQ(builtin_formula(Builtin::Fibonacci).n0, 2);
  for (auto kind : {Builtin::Squares, Builtin::Fibonacci}) {
    const auto f = builtin_formula(kind);
    EXPECT_EQ(f.n0, term(f.family, 0) + 1);
    EXPECT_EQ(f.hypothesis_start, 1);
  }
}

TEST(Builtins, FamilyDispatch) {
  EXPECT_EQ(builtin_formula(SequenceFamily::rth_powers(2)).psi, builtin_formula(Builtin::Squares).psi);
  EXPECT_EQ(builtin_formula(SequenceFamily::rth_powers(3)).psi, builtin_formula(Builtin::Cubes).psi);
  EXPECT_EQ(builtin_formula(SequenceFamily::rth_powers(4)).psi,
            builtin_formula(Builtin::RthPowers, 4).psi);
  EXPECT_EQ(builtin_formula(SequenceFamily::powers_of(2)).psi,
            builtin_formula(Builtin::PowersOf, 2).psi);
  EXPECT_THROW(builtin_formula(SequenceFamily::custom({1, 2})), std::invalid_argument);
  EXPECT_THROW(builtin_formula(Builtin::PowersOf, 1), std::invalid_argument);
}

TEST(Properties, PrintParseRoundTrip) {
  testing::RandomExpr gen(0x5eed);
  for (int i = 0; i < 3000; ++i) {
    const Expr e = gen(static_cast<int>(gen.uniform(1, 8)));
    const std::string text = print(e);
    ASSERT_EQ(parse(text), e) << text;
    ASSERT_EQ(print(parse(text)), text);
  }
}

// Every input yields an Expr or a ParseError, never anything else.
TEST(Properties, ParserIsTotal) {
  const std::string alphabet = "x phi sqrt cbrt root ln log 0123456789 ./+-*^(),$";
  testing::RandomExpr gen(42);
  for (int i = 0; i < 20000; ++i) {
    std::string text;
    const long len = gen.uniform(0, 30);
    for (long k = 0; k < len; ++k) text += alphabet[gen.uniform(0, alphabet.size() - 1)];
    try {
      parse(text);
    } catch (const ParseError& e) {
      ASSERT_LE(e.position(), text.size()) << text;
    }
  }
}

}  // namespace
}  // namespace complement
