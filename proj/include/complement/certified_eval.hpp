// Certified evaluation of expressions at exact rational points.
//
// Subtrees that involve no irrational operation are evaluated in exact
// rational arithmetic; everything else goes through outward-rounded
// intervals. certified_floor and certified_compare escalate precision by
// doubling until the answer is determined or max_bits is exhausted.
#pragma once

#include <optional>
#include <variant>

#include "complement/exact_sequences.hpp"
#include "complement/expr.hpp"
#include "complement/interval.hpp"

namespace complement {

struct EvalConfig {
  Bits initial_bits = 96;
  Bits max_bits = 8192;

  // Throws std::invalid_argument unless 32 <= initial_bits <= max_bits.
  void validate() const;
};

// Value of e(x) if it is rational and reachable by exact arithmetic alone.
std::optional<Rational> eval_exact(const Expr& e, const Rational& x);

// Encloses e(x). Throws DomainError if an argument leaves the domain of
// ln/log/root/division at this precision.
Interval eval_interval(const Expr& e, const Rational& x, Bits bits);

struct Determined {
  BigNat value;
  Bits bits;  // 0 when settled by exact arithmetic
};

struct Uncertified {
  Interval enclosure;
  Bits bits;
};

using CertifiedOutcome = std::variant<Determined, Uncertified>;

// floor(e(x)); Determined(m) only when the enclosure lies in [m, m + 1).
CertifiedOutcome certified_floor(const Expr& e, const Rational& x, const EvalConfig& cfg = {});

enum class Comparison { StrictlyLess, GreaterOrEqual, Uncertified };

struct CompareOutcome {
  Comparison result;
  Bits bits;
};

// Compares e(x) against the integer n.
CompareOutcome certified_compare(const Expr& e, const Rational& x, const BigNat& n,
                                 const EvalConfig& cfg = {});

const char* to_string(Comparison c);

}  // namespace complement
