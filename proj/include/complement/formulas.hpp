// Closed-form inverse maps psi for the built-in families. The complement of
// (u_n) is generated by floor(n + psi(n)) for n >= n0 = u_0 + 1.
#pragma once

#include <string>

#include "complement/exact_sequences.hpp"
#include "complement/expr.hpp"

namespace complement {

struct ComplementFormula {
  Expr psi;
  Index n0;
  SequenceFamily family;
  Index hypothesis_start = 1;
};

enum class Builtin {
  Squares,      // sqrt(x) + 1/2
  Cubes,        // cbrt(x) + 1/(3 cbrt(x + 1))
  RthPowers,    // root(r, x + root(r, x))
  PowersOf,     // log(a, x + log(a, x))
  Triangular,   // sqrt(2x) + 1/2
  Fibonacci,    // log_phi(sqrt5 (log_phi(sqrt5 x) + x) - 5 + 3/x) - 2
};

// `param` is r for RthPowers and a for PowersOf; ignored otherwise.
ComplementFormula builtin_formula(Builtin kind, unsigned long param = 0);

// Picks the dedicated formula where one exists: r = 2 and r = 3 map to the
// square and cube formulas. Throws std::invalid_argument for Custom.
ComplementFormula builtin_formula(const SequenceFamily& family);

// psi written in the expression language; parses to builtin_formula(...).psi.
std::string builtin_psi_text(Builtin kind, unsigned long param = 0);

}  // namespace complement
