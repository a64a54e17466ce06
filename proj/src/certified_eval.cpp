#include "complement/certified_eval.hpp"

#include <algorithm>

namespace complement {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Exact powers whose result would exceed this many bits fall back to
// intervals.
constexpr unsigned long kMaxExactPowBits = 1ul << 20;
// Upper bound on the search for an integer k with base^k == v.
constexpr int kMaxExactLogSteps = 4096;

using Value = std::variant<Rational, Interval>;

std::optional<mpz_class> exact_int_root(const mpz_class& v, unsigned long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) != 0) return r;
  return std::nullopt;
}

std::optional<Rational> exact_root(const Rational& v, unsigned long k) {
  if (v < 0) {
    if (k % 2 == 0) throw DomainError("even root of a negative value", true);
    auto r = exact_root(-v, k);
    if (r) *r = -*r;
    return r;
  }
  auto num = exact_int_root(v.get_num(), k);
  if (!num) return std::nullopt;
  auto den = exact_int_root(v.get_den(), k);
  if (!den) return std::nullopt;
  Rational out(*num, *den);
  out.canonicalize();
  return out;
}

std::optional<Rational> exact_pow(const Rational& v, const Rational& exponent) {
  Rational base = v;
  if (exponent.get_den() != 1) {
    if (!exponent.get_den().fits_ulong_p()) return std::nullopt;
    auto r = exact_root(v, exponent.get_den().get_ui());
    if (!r) return std::nullopt;
    base = *r;
  }
  mpz_class p = exponent.get_num();
  const bool negative = p < 0;
  if (negative) p = -p;
  if (base == 0) {
    if (negative) throw DomainError("zero raised to a negative power", true);
    return p == 0 ? Rational(1) : Rational(0);
  }
  const auto size = mpz_sizeinbase(base.get_num().get_mpz_t(), 2) +
                    mpz_sizeinbase(base.get_den().get_mpz_t(), 2);
  if (!p.fits_ulong_p() || p.get_ui() > kMaxExactPowBits / size) return std::nullopt;
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), p.get_ui());
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), p.get_ui());
  Rational out = negative ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

void check_log_domain(const Rational& base, const Rational& v) {
  if (v <= 0) throw DomainError("logarithm of a nonpositive value", true);
  if (base <= 1) throw DomainError("logarithm base is not > 1", true);
}

// log_base(v) when it is an integer.
std::optional<Rational> exact_log(const Rational& base, const Rational& v) {
  check_log_domain(base, v);
  if (v == 1) return Rational(0);
  const bool inverted = v < 1;
  const Rational target = inverted ? Rational(1 / v) : v;
  Rational power = base;
  for (int k = 1; k <= kMaxExactLogSteps; ++k) {
    if (power == target) return Rational(inverted ? -k : k);
    if (power > target) return std::nullopt;
    power *= base;
  }
  return std::nullopt;
}

Interval to_interval(const Value& v, Bits bits) {
  if (const auto* q = std::get_if<Rational>(&v)) return Interval::exact(*q, bits);
  return std::get<Interval>(v);
}

class Evaluator {
 public:
  Evaluator(const Rational& x, Bits bits) : x_(x), bits_(bits) {}

  Value eval(const Expr& e) {
    return std::visit(
        Overloaded{
            [&](const NumberNode& n) -> Value { return n.value; },
            [&](const VarNode&) -> Value { return x_; },
            [&](const PhiNode&) -> Value { return iv_phi(bits_); },
            [&](const NegNode& n) -> Value {
              Value a = eval(n.arg);
              if (auto* q = std::get_if<Rational>(&a)) return Rational(-*q);
              return iv_neg(std::get<Interval>(a));
            },
            [&](const BinaryNode& n) -> Value { return binary(n); },
            [&](const PowNode& n) -> Value {
              Value a = eval(n.base);
              if (auto* q = std::get_if<Rational>(&a)) {
                if (auto r = exact_pow(*q, n.exponent)) return *r;
              }
              return iv_pow_rational(to_interval(a, bits_), n.exponent);
            },
            [&](const SqrtNode& n) -> Value { return root(n.arg, 2); },
            [&](const RootNode& n) -> Value { return root(n.arg, n.degree); },
            [&](const LnNode& n) -> Value {
              Value a = eval(n.arg);
              if (auto* q = std::get_if<Rational>(&a)) {
                if (*q <= 0) throw DomainError("logarithm of a nonpositive value", true);
                if (*q == 1) return Rational(0);
              }
              return iv_ln(to_interval(a, bits_));
            },
            [&](const LogNode& n) -> Value {
              Value b = eval(n.base);
              Value a = eval(n.arg);
              const auto* qb = std::get_if<Rational>(&b);
              const auto* qa = std::get_if<Rational>(&a);
              if (qb && qa) {
                if (auto r = exact_log(*qb, *qa)) return *r;
              } else if (qa) {
                if (*qa <= 0) throw DomainError("logarithm of a nonpositive value", true);
                if (*qa == 1) {
                  const Interval ib = to_interval(b, bits_);
                  if (mpfr_cmp_ui(ib.hi().get(), 1) <= 0) {
                    throw DomainError("logarithm base is not > 1", true);
                  }
                  if (mpfr_cmp_ui(ib.lo().get(), 1) <= 0) {
                    throw DomainError("logarithm base straddles 1", false);
                  }
                  return Rational(0);
                }
              }
              return iv_log(to_interval(b, bits_), to_interval(a, bits_));
            },
        },
        e.node().v);
  }

 private:
  Value root(const Expr& arg, unsigned long k) {
    Value a = eval(arg);
    if (auto* q = std::get_if<Rational>(&a)) {
      if (auto r = exact_root(*q, k)) return *r;
    }
    const Interval iv = to_interval(a, bits_);
    return k == 2 ? iv_sqrt(iv) : iv_root(iv, k);
  }

  Value binary(const BinaryNode& n) {
    Value a = eval(n.lhs);
    Value b = eval(n.rhs);
    const auto* qa = std::get_if<Rational>(&a);
    const auto* qb = std::get_if<Rational>(&b);
    if (qa && qb) {
      switch (n.op) {
        case BinaryOp::Add: return Rational(*qa + *qb);
        case BinaryOp::Sub: return Rational(*qa - *qb);
        case BinaryOp::Mul: return Rational(*qa * *qb);
        case BinaryOp::Div:
          if (*qb == 0) throw DomainError("division by zero", true);
          return Rational(*qa / *qb);
      }
    }
    const Interval ia = to_interval(a, bits_);
    const Interval ib = to_interval(b, bits_);
    switch (n.op) {
      case BinaryOp::Add: return iv_add(ia, ib);
      case BinaryOp::Sub: return iv_sub(ia, ib);
      case BinaryOp::Mul: return iv_mul(ia, ib);
      case BinaryOp::Div: return iv_div(ia, ib);
    }
    throw std::logic_error("unhandled binary operator");
  }

  const Rational& x_;
  Bits bits_;
};

mpz_class floor_of(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Drives precision escalation. `decide` returns true once it can answer from
// the enclosure; the last enclosure is kept for the uncertified case.
template <class Decide>
std::optional<Interval> escalate(const Expr& e, const Rational& x, const EvalConfig& cfg,
                                 Bits& bits_used, Decide&& decide) {
  cfg.validate();
  Bits bits = cfg.initial_bits;
  std::optional<Interval> last;
  for (;;) {
    bits_used = bits;
    try {
      Value v = Evaluator(x, bits).eval(e);
      if (decide(v, bits)) return std::nullopt;
      last = std::get<Interval>(std::move(v));
    } catch (const DomainError& err) {
      if (err.definite() || bits >= cfg.max_bits) throw;
    }
    if (bits >= cfg.max_bits) break;
    bits = std::min(bits * 2, cfg.max_bits);
  }
  return last;
}

}  // namespace

void EvalConfig::validate() const {
  if (initial_bits < 32 || initial_bits > max_bits) {
    throw std::invalid_argument("precision config needs 32 <= initial_bits <= max_bits");
  }
}

std::optional<Rational> eval_exact(const Expr& e, const Rational& x) {
  Value v = Evaluator(x, 64).eval(e);
  if (auto* q = std::get_if<Rational>(&v)) return *q;
  return std::nullopt;
}

Interval eval_interval(const Expr& e, const Rational& x, Bits bits) {
  return to_interval(Evaluator(x, bits).eval(e), bits);
}

CertifiedOutcome certified_floor(const Expr& e, const Rational& x, const EvalConfig& cfg) {
  std::optional<Determined> answer;
  Bits bits_used = 0;
  auto last = escalate(e, x, cfg, bits_used, [&](const Value& v, Bits bits) {
    if (const auto* q = std::get_if<Rational>(&v)) {
      answer = Determined{floor_of(*q), 0};
      return true;
    }
    const auto& iv = std::get<Interval>(v);
    mpz_class m;
    mpfr_get_z(m.get_mpz_t(), iv.lo().get(), MPFR_RNDD);
    const mpz_class next = m + 1;
    if (mpfr_cmp_z(iv.hi().get(), next.get_mpz_t()) < 0) {
      answer = Determined{m, bits};
      return true;
    }
    return false;
  });
  if (answer) return *answer;
  return Uncertified{std::move(*last), bits_used};
}

CompareOutcome certified_compare(const Expr& e, const Rational& x, const BigNat& n,
                                 const EvalConfig& cfg) {
  std::optional<CompareOutcome> answer;
  Bits bits_used = 0;
  escalate(e, x, cfg, bits_used, [&](const Value& v, Bits bits) {
    if (const auto* q = std::get_if<Rational>(&v)) {
      answer = {*q < n ? Comparison::StrictlyLess : Comparison::GreaterOrEqual, 0};
      return true;
    }
    const auto& iv = std::get<Interval>(v);
    if (mpfr_cmp_z(iv.hi().get(), n.get_mpz_t()) < 0) {
      answer = {Comparison::StrictlyLess, bits};
    } else if (mpfr_cmp_z(iv.lo().get(), n.get_mpz_t()) >= 0) {
      answer = {Comparison::GreaterOrEqual, bits};
    }
    return answer.has_value();
  });
  if (answer) return *answer;
  return {Comparison::Uncertified, bits_used};
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::StrictlyLess: return "strictly-less";
    case Comparison::GreaterOrEqual: return "greater-or-equal";
    case Comparison::Uncertified: return "uncertified";
  }
  return "?";
}

}  // namespace complement
