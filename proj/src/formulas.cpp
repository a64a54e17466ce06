#include "complement/formulas.hpp"

#include <stdexcept>

namespace complement {

namespace {

Expr num(long v) { return Expr::number(v); }
Expr half() { return Expr::number(Rational(1, 2)); }

void require_param(Builtin kind, unsigned long param) {
  if ((kind == Builtin::RthPowers || kind == Builtin::PowersOf) && param < 2) {
    throw std::invalid_argument("built-in formula parameter must be >= 2");
  }
}

}  // namespace

ComplementFormula builtin_formula(Builtin kind, unsigned long param) {
  require_param(kind, param);
  const Expr x = Expr::var();
  switch (kind) {
    case Builtin::Squares:
      return {Expr::sqrt(x) + half(), 1, SequenceFamily::rth_powers(2)};
    case Builtin::Cubes:
      return {Expr::root(3, x) + num(1) / (num(3) * Expr::root(3, x + num(1))), 1,
              SequenceFamily::rth_powers(3)};
    case Builtin::RthPowers: {
      const auto r = static_cast<unsigned>(param);
      return {Expr::root(r, x + Expr::root(r, x)), 1, SequenceFamily::rth_powers(r)};
    }
    case Builtin::PowersOf: {
      const Expr a = num(static_cast<long>(param));
      return {Expr::log(a, x + Expr::log(a, x)), 2, SequenceFamily::powers_of(param)};
    }
    case Builtin::Triangular:
      return {Expr::sqrt(num(2) * x) + half(), 1, SequenceFamily::triangular()};
    case Builtin::Fibonacci: {
      const Expr phi = Expr::phi();
      const Expr sqrt5 = Expr::sqrt(num(5));
      const Expr inner = sqrt5 * (Expr::log(phi, sqrt5 * x) + x) - num(5) + num(3) / x;
      return {Expr::log(phi, inner) - num(2), 2, SequenceFamily::fibonacci()};
    }
  }
  throw std::invalid_argument("unknown built-in formula");
}

ComplementFormula builtin_formula(const SequenceFamily& family) {
  const auto& kind = family.kind();
  if (const auto* p = std::get_if<RthPowers>(&kind)) {
    if (p->r == 2) return builtin_formula(Builtin::Squares);
    if (p->r == 3) return builtin_formula(Builtin::Cubes);
    return builtin_formula(Builtin::RthPowers, p->r);
  }
  if (const auto* p = std::get_if<PowersOf>(&kind)) return builtin_formula(Builtin::PowersOf, p->base);
  if (std::holds_alternative<Triangular>(kind)) return builtin_formula(Builtin::Triangular);
  if (std::holds_alternative<FibonacciShifted>(kind)) return builtin_formula(Builtin::Fibonacci);
  throw std::invalid_argument("custom sequences have no built-in formula");
}

std::string builtin_psi_text(Builtin kind, unsigned long param) {
  require_param(kind, param);
  const std::string p = std::to_string(param);
  switch (kind) {
    case Builtin::Squares: return "sqrt(x) + 1/2";
    case Builtin::Cubes: return "cbrt(x) + 1/(3*cbrt(x + 1))";
    case Builtin::RthPowers: return "root(" + p + ", x + root(" + p + ", x))";
    case Builtin::PowersOf: return "log(" + p + ", x + log(" + p + ", x))";
    case Builtin::Triangular: return "sqrt(2*x) + 1/2";
    case Builtin::Fibonacci: return "log(phi, sqrt(5)*(log(phi, sqrt(5)*x) + x) - 5 + 3/x) - 2";
  }
  throw std::invalid_argument("unknown built-in formula");
}

}  // namespace complement
