// Certified generation of floor(n + psi(n)), per-index verification of the
// hypothesis u_n - n < phi(n) <= u_n - n + 1 (checked through psi), oracle
// cross-checks, and Gould's approximate non-Fibonacci formula.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "complement/certified_eval.hpp"
#include "complement/formulas.hpp"

namespace complement {

class UncertifiedError : public std::runtime_error {
 public:
  UncertifiedError(Index index, Bits bits);
  Index index() const { return index_; }

 private:
  Index index_;
};

struct GeneratedTerm {
  Index n;
  BigNat value;
  Bits bits;  // precision that settled the floor; 0 for exact arithmetic
};

// floor(n + psi(n)) for n in [n_from, n_to]. Throws std::invalid_argument if
// n_from < f.n0 or n_from > n_to, UncertifiedError or DomainError otherwise.
std::vector<GeneratedTerm> generate_terms(const ComplementFormula& f, Index n_from, Index n_to,
                                          const EvalConfig& cfg = {});
std::vector<BigNat> generate(const ComplementFormula& f, Index n_from, Index n_to,
                             const EvalConfig& cfg = {});

enum class Inequality {
  Lower,  // psi(u_n - n) < n
  Upper,  // psi(u_n - n + 1) >= n
};

const char* to_string(Inequality which);

struct HypothesisFailure {
  Index n;
  Inequality which;
  // What the certified comparison found instead; empty `domain_error` unless
  // psi could not be evaluated at all.
  Comparison observed;
  std::string domain_error;
};

struct VerificationReport {
  std::string family_id;
  Index n_lo = 0;
  Index n_hi = 0;
  std::vector<HypothesisFailure> failures;
  std::vector<Index> uncertified;
  bool pass = false;
};

// Checks both inequalities for n in [f.hypothesis_start, n_max]. Uncertified
// indices fail the report.
VerificationReport verify_hypothesis(const ComplementFormula& f, Index n_max,
                                     const EvalConfig& cfg = {});

struct CrosscheckMismatch {
  Index n;
  std::optional<BigNat> formula;  // empty when the floor was uncertified
  BigNat oracle;
};

struct CrosscheckReport {
  std::string family_id;
  Index n_lo = 0;
  Index n_hi = 0;
  std::vector<CrosscheckMismatch> mismatches;
  bool pass = false;
};

// Compares the first `count` generated terms with the sieve's first `count`
// complement elements.
CrosscheckReport crosscheck(const ComplementFormula& f, Index count, const EvalConfig& cfg = {});

// Gould: F(n) = floor(log_phi n + (1/2) log_phi 5 - 1), g_n = n + F(n + F(n + F(n))).
Index gould_F(Index n, const EvalConfig& cfg = {});
Index gould_term(Index n, const EvalConfig& cfg = {});

struct GouldRow {
  Index n;
  Index gould;
  BigNat oracle;
  bool equal;
};

std::vector<GouldRow> gould_compare(Index n_max, const EvalConfig& cfg = {});

}  // namespace complement
