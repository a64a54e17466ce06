#include <gtest/gtest.h>

#include <random>

#include "complement/certified_eval.hpp"
#include "complement/formulas.hpp"
#include "random_expr.hpp"
#include "reference.hpp"

namespace complement {
namespace {

const Expr x = Expr::var();
const Expr fib_psi = builtin_formula(Builtin::Fibonacci).psi;

mpq_class as_rational(const BigFloat& f) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), f.get());
  return q;
}

mpq_class decimal(const char* digits) {
  // "d.ddd" -> exact rational
  std::string s(digits);
  const auto dot = s.find('.');
  const auto frac = s.size() - dot - 1;
  s.erase(dot, 1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  mpq_class q(mpz_class(s), den);
  q.canonicalize();
  return q;
}

BigNat floor_value(const CertifiedOutcome& o) {
  EXPECT_TRUE(std::holds_alternative<Determined>(o));
  return std::get<Determined>(o).value;
}

TEST(EvalInterval, Examples) {
  const auto exact = eval_interval(x + Expr::number(1), 3, 64);
  EXPECT_TRUE(exact.is_point());
  EXPECT_TRUE(exact.contains(mpq_class(4)));

  const auto root2 = eval_interval(Expr::sqrt(x), 2, 96);
  BigFloat bound(96);
  mpfr_set_ui_2exp(bound.get(), 1, -90, MPFR_RNDN);
  EXPECT_LT(root2.width(), bound);
  EXPECT_GT(as_rational(root2.lo()), decimal("1.41421356237309504880168872"));
  EXPECT_LT(as_rational(root2.hi()), decimal("1.41421356237309504880168873"));

  // 300-bit mpmath reference: 2.30360902488927836785589289780760...
  const auto fib2 = eval_interval(fib_psi, 2, 96);
  EXPECT_GT(as_rational(fib2.lo()), decimal("2.303609024889278367855892"));
  EXPECT_LT(as_rational(fib2.hi()), decimal("2.303609024889278367855893"));
}

TEST(EvalInterval, DomainErrors) {
  EXPECT_THROW(eval_interval(Expr::ln(x - Expr::number(1)), 1, 64), DomainError);
  EXPECT_THROW(eval_interval(Expr::number(1) / x, 0, 64), DomainError);
  EXPECT_THROW(eval_interval(Expr::sqrt(-x), 2, 64), DomainError);
  EXPECT_THROW(eval_interval(Expr::log(Expr::number(1), x), 2, 64), DomainError);
  EXPECT_THROW(eval_interval(Expr::log(Expr::number(Rational(1, 2)), Expr::number(1)), 0, 64),
               DomainError);
  EXPECT_NO_THROW(eval_interval(Expr::root(3, -x), 8, 64));
}

TEST(EvalExact, RationalFastPath) {
  EXPECT_EQ(*eval_exact(Expr::sqrt(x) + Expr::number(Rational(1, 2)), 4), Rational(5, 2));
  EXPECT_EQ(*eval_exact(Expr::root(3, x), Rational(-8, 27)), Rational(-2, 3));
  EXPECT_EQ(*eval_exact(Expr::pow(x, Rational(-3, 2)), 4), Rational(1, 8));
  EXPECT_EQ(*eval_exact(Expr::log(Expr::number(2), x), 1024), 10);
  EXPECT_EQ(*eval_exact(Expr::log(Expr::number(10), x), Rational(1, 1000)), -3);
  EXPECT_EQ(*eval_exact(Expr::ln(x), 1), 0);
  EXPECT_EQ(*eval_exact(Expr::log(Expr::phi(), x), 1), 0);
  EXPECT_FALSE(eval_exact(Expr::sqrt(x), 2));
  EXPECT_FALSE(eval_exact(Expr::log(Expr::number(2), x), 1000));
  EXPECT_FALSE(eval_exact(Expr::phi(), 0));
}

TEST(CertifiedFloor, Examples) {
  const auto exact = certified_floor(x + Expr::number(Rational(3, 2)), 1);
  EXPECT_EQ(floor_value(exact), 2);
  EXPECT_EQ(std::get<Determined>(exact).bits, 0);

  // 9.00624838810763567352930668221696..., a near-integer case.
  EXPECT_EQ(floor_value(certified_floor(x + fib_psi, 5)), 9);
  EXPECT_EQ(floor_value(certified_floor(x + Expr::sqrt(x) + Expr::number(Rational(1, 2)), 4)), 6);
  EXPECT_EQ(floor_value(certified_floor(Expr::neg(Expr::sqrt(x)), 2)), -2);
}

TEST(CertifiedFloor, EscalatesPrecision) {
  // sqrt(10^40 + 1) = 10^20 + 5e-21 - ...; 96 bits cannot separate it from 10^20.
  const Expr e = Expr::sqrt(x) * Expr::number(mpz_class("100000000000000000000")) -
                 Expr::number(mpz_class("10000000000000000000000000000000000000000"));
  const auto out = certified_floor(e, Rational(mpz_class("10000000000000000000000000000000000000001")));
  ASSERT_TRUE(std::holds_alternative<Determined>(out));
  EXPECT_EQ(std::get<Determined>(out).value, 0);
  EXPECT_GT(std::get<Determined>(out).bits, 96);
}

TEST(CertifiedFloor, IrrationalPathIntegerIsUncertified) {
  const Expr two = Expr::sqrt(Expr::number(2)) * Expr::sqrt(Expr::number(2));
  const auto out = certified_floor(two + x, 1, {64, 512});
  ASSERT_TRUE(std::holds_alternative<Uncertified>(out));
  EXPECT_EQ(std::get<Uncertified>(out).bits, 512);
  EXPECT_TRUE(std::get<Uncertified>(out).enclosure.contains(mpq_class(3)));
}

TEST(CertifiedFloor, IndeterminateDomainErrorSurfacesAtMaxBits) {
  const Expr zero = Expr::sqrt(Expr::number(2)) * Expr::sqrt(Expr::number(2)) - Expr::number(2);
  EXPECT_THROW(certified_floor(Expr::ln(zero + x), 0, {64, 256}), DomainError);
  EXPECT_THROW(certified_floor(Expr::ln(x), 0), DomainError);
}

TEST(CertifiedFloor, RejectsBadConfig) {
  EXPECT_THROW(certified_floor(x, 1, {16, 8192}), std::invalid_argument);
  EXPECT_THROW(certified_floor(x, 1, {512, 256}), std::invalid_argument);
}

TEST(CertifiedCompare, Examples) {
  EXPECT_EQ(certified_compare(fib_psi, 1, 1).result, Comparison::StrictlyLess);
  EXPECT_EQ(certified_compare(fib_psi, 2, 1).result, Comparison::GreaterOrEqual);
  EXPECT_EQ(certified_compare(fib_psi, 1, 0).result, Comparison::GreaterOrEqual);
  EXPECT_EQ(certified_compare(Expr::log(Expr::number(2), x + Expr::log(Expr::number(2), x)), 1, 0).result,
            Comparison::GreaterOrEqual);
  const Expr two = Expr::sqrt(Expr::number(2)) * Expr::sqrt(Expr::number(2));
  EXPECT_EQ(certified_compare(two, 0, 2, {64, 256}).result, Comparison::Uncertified);
}

TEST(Binet, NearestIntegerOfPhiPowerOverRootFiveIsFib) {
  for (int n = 0; n <= 200; ++n) {
    const Expr e = Expr::pow(Expr::phi(), n) / Expr::sqrt(Expr::number(5)) + Expr::number(Rational(1, 2));
    ASSERT_EQ(floor_value(certified_floor(e, 0)), fib(n)) << "n=" << n;
  }
}

// Intervals at b and 2b bits overlap and both contain the midpoint of the
// 4b-bit enclosure.
TEST(Properties, Containment) {
  testing::RandomExpr gen(2024);
  int evaluated = 0;
  for (int i = 0; i < 4000; ++i) {
    const Expr e = gen(static_cast<int>(gen.uniform(1, 6)));
    const Rational at = gen.rational(50, 7, false);
    const Bits b = 32 * gen.uniform(2, 6);
    try {
      const auto i1 = eval_interval(e, at, b);
      const auto i2 = eval_interval(e, at, 2 * b);
      const auto i4 = eval_interval(e, at, 4 * b);
      const mpq_class mid = (as_rational(i4.lo()) + as_rational(i4.hi())) / 2;
      ASSERT_TRUE(i1.contains(mid)) << print(e) << " at " << at.get_str();
      ASSERT_TRUE(i2.contains(mid)) << print(e) << " at " << at.get_str();
      ++evaluated;
    } catch (const DomainError&) {
    } catch (const std::invalid_argument&) {
    }
  }
  EXPECT_GT(evaluated, 1000);
}

std::vector<std::pair<Builtin, unsigned long>> builtins() {
  return {{Builtin::Squares, 0},     {Builtin::Cubes, 0},       {Builtin::RthPowers, 2},
          {Builtin::RthPowers, 3},   {Builtin::RthPowers, 4},   {Builtin::RthPowers, 5},
          {Builtin::PowersOf, 2},    {Builtin::PowersOf, 3},    {Builtin::PowersOf, 10},
          {Builtin::Triangular, 0},  {Builtin::Fibonacci, 0}};
}

TEST(Properties, MonotoneWidth) {
  for (const auto& [kind, param] : builtins()) {
    const Expr psi = builtin_formula(kind, param).psi;
    for (long v = 1; v <= 100; ++v) {
      for (Bits b = 64; b <= 1024; b *= 2) {
        const auto lo_prec = eval_interval(psi, v, b);
        const auto hi_prec = eval_interval(psi, v, 2 * b);
        ASSERT_LE(as_rational(hi_prec.width()), as_rational(lo_prec.width()))
            << print(psi) << " x=" << v << " bits=" << b;
      }
    }
  }
}

TEST(Properties, FloorStability) {
  std::mt19937_64 rng(99);
  for (const auto& [kind, param] : builtins()) {
    const auto f = builtin_formula(kind, param);
    const Expr generator = x + f.psi;
    for (int i = 0; i < 40; ++i) {
      const long v = f.n0 + static_cast<long>(rng() % 100000);
      const auto first = certified_floor(generator, v);
      ASSERT_TRUE(std::holds_alternative<Determined>(first));
      const auto& d = std::get<Determined>(first);
      if (d.bits == 0) continue;
      const auto again = certified_floor(generator, v, {2 * d.bits, std::max<Bits>(2 * d.bits, 8192)});
      ASSERT_TRUE(std::holds_alternative<Determined>(again));
      ASSERT_EQ(std::get<Determined>(again).value, d.value);
    }
  }
}

TEST(Properties, NoWrongAnswersAgainstDirectEvaluation) {
  std::mt19937_64 rng(1234);
  const auto all = builtins();
  int determined = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto [kind, param] = all[rng() % all.size()];
    const auto f = builtin_formula(kind, param);
    const long v = f.n0 + static_cast<long>(rng() % (1000000 - f.n0 + 1));
    const auto out = certified_floor(x + f.psi, v);
    if (const auto* d = std::get_if<Determined>(&out)) {
      const auto ref = testing::reference_generator_floor(kind, param, v);
      ASSERT_FALSE(ref.ambiguous);
      ASSERT_EQ(d->value, ref.floor) << print(f.psi) << " at " << v;
      ++determined;
    }
  }
  EXPECT_EQ(determined, 1000);
}

}  // namespace
}  // namespace complement
