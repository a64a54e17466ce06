// Outward-rounded interval arithmetic on MPFR floats.
//
// Every primitive returns an interval that contains the exact image of its
// operands: lower endpoints are computed rounding toward -inf, upper
// endpoints toward +inf.
#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace complement {

using Bits = mpfr_prec_t;

// Raised when an argument leaves the domain of an operation. `definite()`
// is true when the whole argument interval is outside the domain; otherwise
// the interval merely straddles the boundary and more precision may help.
class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& what, bool definite)
      : std::domain_error(what), definite_(definite) {}
  bool definite() const { return definite_; }

 private:
  bool definite_;
};

// RAII owner of one mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(Bits bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Bits bits() const { return mpfr_get_prec(value_); }

  // Shortest round-trip-ish decimal with `digits` significant digits.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }

 private:
  mpfr_t value_;
};

class Interval {
 public:
  // [v, v] rounded outward to `bits`; zero width when v is representable.
  static Interval exact(const mpq_class& v, Bits bits);
  static Interval from_bounds(const mpq_class& lo, const mpq_class& hi, Bits bits);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  Bits bits() const { return lo_.bits(); }

  bool contains(const mpq_class& v) const;
  bool contains(const BigFloat& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const;
  bool is_point() const { return lo_ == hi_; }
  // Upper bound on hi - lo, rounded up.
  BigFloat width() const;

  std::string to_string(int digits = 20) const;

 private:
  friend class IntervalBuilder;
  explicit Interval(Bits bits) : lo_(bits), hi_(bits) {}
  BigFloat lo_;
  BigFloat hi_;
};

Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);
Interval iv_div(const Interval& a, const Interval& b);
Interval iv_neg(const Interval& a);
Interval iv_sqrt(const Interval& a);
Interval iv_root(const Interval& a, unsigned long k);
Interval iv_ln(const Interval& a);
// log_base(a) = ln(a) / ln(base); the base must be > 1.
Interval iv_log(const Interval& base, const Interval& a);
Interval iv_pow_rational(const Interval& a, const mpq_class& exponent);
// (1 + sqrt(5)) / 2
Interval iv_phi(Bits bits);

}  // namespace complement
