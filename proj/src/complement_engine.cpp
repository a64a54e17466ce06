#include "complement/complement_engine.hpp"

namespace complement {

namespace {

Expr generator_expr(const ComplementFormula& f) { return Expr::var() + f.psi; }

GeneratedTerm generate_one(const Expr& generator, Index n, const EvalConfig& cfg) {
  const auto outcome = certified_floor(generator, Rational(static_cast<long>(n)), cfg);
  if (const auto* u = std::get_if<Uncertified>(&outcome)) throw UncertifiedError(n, u->bits);
  const auto& d = std::get<Determined>(outcome);
  return {n, d.value, d.bits};
}

Rational to_rational(const BigNat& v) { return Rational(v); }

const Expr& gould_inner() {
  static const Expr e = parse("log(phi, x) + log(phi, 5)/2 - 1");
  return e;
}

}  // namespace

UncertifiedError::UncertifiedError(Index index, Bits bits)
    : std::runtime_error("floor not certified at index " + std::to_string(index) + " with " +
                         std::to_string(bits) + " bits"),
      index_(index) {}

std::vector<GeneratedTerm> generate_terms(const ComplementFormula& f, Index n_from, Index n_to,
                                          const EvalConfig& cfg) {
  if (n_from < f.n0) {
    throw std::invalid_argument("start index " + std::to_string(n_from) + " is below n0 = " +
                                std::to_string(f.n0));
  }
  if (n_from > n_to) throw std::invalid_argument("empty index range");
  cfg.validate();
  const Expr generator = generator_expr(f);
  std::vector<GeneratedTerm> out;
  out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (Index n = n_from; n <= n_to; ++n) out.push_back(generate_one(generator, n, cfg));
  return out;
}

std::vector<BigNat> generate(const ComplementFormula& f, Index n_from, Index n_to,
                             const EvalConfig& cfg) {
  std::vector<BigNat> out;
  for (auto& t : generate_terms(f, n_from, n_to, cfg)) out.push_back(std::move(t.value));
  return out;
}

const char* to_string(Inequality which) {
  return which == Inequality::Lower ? "psi(u_n - n) < n" : "psi(u_n - n + 1) >= n";
}

VerificationReport verify_hypothesis(const ComplementFormula& f, Index n_max,
                                     const EvalConfig& cfg) {
  if (f.hypothesis_start < 0) throw std::invalid_argument("hypothesis_start must be >= 0");
  if (n_max < f.hypothesis_start) throw std::invalid_argument("n_max is below hypothesis_start");
  cfg.validate();

  VerificationReport report;
  report.family_id = f.family.id();
  report.n_lo = f.hypothesis_start;
  report.n_hi = n_max;

  for (Index n = f.hypothesis_start; n <= n_max; ++n) {
    const BigNat u = term(f.family, n);
    const BigNat target = n;
    bool uncertified = false;

    auto check = [&](Inequality which, const BigNat& at, Comparison wanted) {
      try {
        const auto got = certified_compare(f.psi, to_rational(at), target, cfg).result;
        if (got == Comparison::Uncertified) {
          uncertified = true;
        } else if (got != wanted) {
          report.failures.push_back({n, which, got, {}});
        }
      } catch (const DomainError& err) {
        report.failures.push_back({n, which, Comparison::Uncertified, err.what()});
      }
    };
    check(Inequality::Lower, u - n, Comparison::StrictlyLess);
    check(Inequality::Upper, u - n + 1, Comparison::GreaterOrEqual);
    if (uncertified) report.uncertified.push_back(n);
  }
  report.pass = report.failures.empty() && report.uncertified.empty();
  return report;
}

CrosscheckReport crosscheck(const ComplementFormula& f, Index count, const EvalConfig& cfg) {
  if (count < 1) throw std::invalid_argument("crosscheck count must be >= 1");
  cfg.validate();

  CrosscheckReport report;
  report.family_id = f.family.id();
  report.n_lo = f.n0;
  report.n_hi = f.n0 + count - 1;

  const auto oracle = oracle_complement_prefix(f.family, static_cast<std::size_t>(count));
  const Expr generator = generator_expr(f);
  for (Index i = 0; i < count; ++i) {
    const Index n = f.n0 + i;
    const BigNat& expected = oracle[static_cast<std::size_t>(i)];
    try {
      const auto got = generate_one(generator, n, cfg);
      if (got.value != expected) report.mismatches.push_back({n, got.value, expected});
    } catch (const UncertifiedError&) {
      report.mismatches.push_back({n, std::nullopt, expected});
    } catch (const DomainError&) {
      report.mismatches.push_back({n, std::nullopt, expected});
    }
  }
  report.pass = report.mismatches.empty();
  return report;
}

Index gould_F(Index n, const EvalConfig& cfg) {
  if (n < 1) throw std::invalid_argument("gould_F needs n >= 1");
  const auto outcome = certified_floor(gould_inner(), Rational(static_cast<long>(n)), cfg);
  if (const auto* u = std::get_if<Uncertified>(&outcome)) throw UncertifiedError(n, u->bits);
  return std::get<Determined>(outcome).value.get_si();
}

Index gould_term(Index n, const EvalConfig& cfg) {
  if (n < 1) throw std::invalid_argument("gould_term needs n >= 1");
  return n + gould_F(n + gould_F(n + gould_F(n, cfg), cfg), cfg);
}

std::vector<GouldRow> gould_compare(Index n_max, const EvalConfig& cfg) {
  if (n_max < 1) return {};
  const auto oracle = oracle_complement_prefix(SequenceFamily::fibonacci(),
                                               static_cast<std::size_t>(n_max));
  std::vector<GouldRow> rows;
  rows.reserve(oracle.size());
  for (Index n = 1; n <= n_max; ++n) {
    const Index g = gould_term(n, cfg);
    const BigNat& o = oracle[static_cast<std::size_t>(n - 1)];
    rows.push_back({n, g, o, o == g});
  }
  return rows;
}

}  // namespace complement
