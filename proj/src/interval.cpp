#include "complement/interval.hpp"

#include <algorithm>
#include <array>

namespace complement {

BigFloat::BigFloat(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid, minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*R*g", digits, rnd, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

class IntervalBuilder {
 public:
  static Interval blank(Bits bits) { return Interval(bits); }
  static mpfr_ptr lo(Interval& iv) { return iv.lo_.get(); }
  static mpfr_ptr hi(Interval& iv) { return iv.hi_.get(); }
};

namespace {

using B = IntervalBuilder;

Bits joint_bits(const Interval& a, const Interval& b) { return std::max(a.bits(), b.bits()); }

using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Result spans the min/max over all endpoint combinations, each computed
// with the matching directed rounding.
Interval endpoint_hull(const Interval& a, const Interval& b, BinaryFn fn) {
  Interval out = B::blank(joint_bits(a, b));
  const std::array<mpfr_srcptr, 2> as{a.lo().get(), a.hi().get()};
  const std::array<mpfr_srcptr, 2> bs{b.lo().get(), b.hi().get()};
  BigFloat tmp(out.bits());
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      fn(tmp.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(tmp.get(), B::lo(out)) < 0) mpfr_set(B::lo(out), tmp.get(), MPFR_RNDD);
      fn(tmp.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(tmp.get(), B::hi(out)) > 0) mpfr_set(B::hi(out), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
  return out;
}

}  // namespace

Interval Interval::exact(const mpq_class& v, Bits bits) { return from_bounds(v, v, bits); }

Interval Interval::from_bounds(const mpq_class& lo, const mpq_class& hi, Bits bits) {
  if (hi < lo) throw std::invalid_argument("interval bounds out of order");
  Interval out(bits);
  mpfr_set_q(out.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return out;
}

bool Interval::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_.get(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), v.get_mpq_t()) >= 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

BigFloat Interval::width() const {
  BigFloat w(bits());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

Interval iv_add(const Interval& a, const Interval& b) {
  Interval out = B::blank(joint_bits(a, b));
  mpfr_add(B::lo(out), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(B::hi(out), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return out;
}

Interval iv_sub(const Interval& a, const Interval& b) {
  Interval out = B::blank(joint_bits(a, b));
  mpfr_sub(B::lo(out), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(B::hi(out), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return out;
}

Interval iv_neg(const Interval& a) {
  Interval out = B::blank(a.bits());
  mpfr_neg(B::lo(out), a.hi().get(), MPFR_RNDD);
  mpfr_neg(B::hi(out), a.lo().get(), MPFR_RNDU);
  return out;
}

Interval iv_mul(const Interval& a, const Interval& b) { return endpoint_hull(a, b, mpfr_mul); }

Interval iv_div(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw DomainError("division by an interval containing zero", b.is_point());
  }
  return endpoint_hull(a, b, mpfr_div);
}

Interval iv_sqrt(const Interval& a) {
  if (mpfr_sgn(a.hi().get()) < 0) throw DomainError("square root of a negative value", true);
  if (mpfr_sgn(a.lo().get()) < 0) throw DomainError("square root argument straddles zero", false);
  Interval out = B::blank(a.bits());
  mpfr_sqrt(B::lo(out), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(B::hi(out), a.hi().get(), MPFR_RNDU);
  return out;
}

Interval iv_root(const Interval& a, unsigned long k) {
  if (k < 2) throw std::invalid_argument("root degree must be >= 2");
  if (k % 2 == 0) {
    if (mpfr_sgn(a.hi().get()) < 0) throw DomainError("even root of a negative value", true);
    if (mpfr_sgn(a.lo().get()) < 0) throw DomainError("even root argument straddles zero", false);
  }
  Interval out = B::blank(a.bits());
  mpfr_rootn_ui(B::lo(out), a.lo().get(), k, MPFR_RNDD);
  mpfr_rootn_ui(B::hi(out), a.hi().get(), k, MPFR_RNDU);
  return out;
}

Interval iv_ln(const Interval& a) {
  if (mpfr_sgn(a.hi().get()) <= 0) throw DomainError("logarithm of a nonpositive value", true);
  if (mpfr_sgn(a.lo().get()) <= 0) throw DomainError("logarithm argument straddles zero", false);
  Interval out = B::blank(a.bits());
  mpfr_log(B::lo(out), a.lo().get(), MPFR_RNDD);
  mpfr_log(B::hi(out), a.hi().get(), MPFR_RNDU);
  return out;
}

Interval iv_log(const Interval& base, const Interval& a) {
  if (mpfr_cmp_ui(base.hi().get(), 1) <= 0) throw DomainError("logarithm base is not > 1", true);
  if (mpfr_cmp_ui(base.lo().get(), 1) <= 0) throw DomainError("logarithm base straddles 1", false);
  return iv_div(iv_ln(a), iv_ln(base));
}

Interval iv_pow_rational(const Interval& a, const mpq_class& exponent) {
  const mpz_class& q = exponent.get_den();
  mpz_class p = exponent.get_num();
  const bool negative = p < 0;
  if (negative) p = -p;
  if (!q.fits_ulong_p() || !p.fits_ulong_p()) {
    throw std::invalid_argument("exponent numerator/denominator too large");
  }

  Interval base = q == 1 ? a : iv_root(a, q.get_ui());
  const unsigned long e = p.get_ui();
  Interval out = B::blank(base.bits());
  if (e == 0) {
    mpfr_set_ui(B::lo(out), 1, MPFR_RNDD);
    mpfr_set_ui(B::hi(out), 1, MPFR_RNDU);
  } else if (e % 2 == 1 || mpfr_sgn(base.lo().get()) >= 0) {
    mpfr_pow_ui(B::lo(out), base.lo().get(), e, MPFR_RNDD);
    mpfr_pow_ui(B::hi(out), base.hi().get(), e, MPFR_RNDU);
  } else if (mpfr_sgn(base.hi().get()) <= 0) {
    mpfr_pow_ui(B::lo(out), base.hi().get(), e, MPFR_RNDD);
    mpfr_pow_ui(B::hi(out), base.lo().get(), e, MPFR_RNDU);
  } else {
    // Even power of an interval straddling zero.
    BigFloat left(base.bits());
    BigFloat right(base.bits());
    mpfr_pow_ui(left.get(), base.lo().get(), e, MPFR_RNDU);
    mpfr_pow_ui(right.get(), base.hi().get(), e, MPFR_RNDU);
    mpfr_set_zero(B::lo(out), 1);
    mpfr_max(B::hi(out), left.get(), right.get(), MPFR_RNDU);
  }
  if (negative) return iv_div(Interval::exact(1, out.bits()), out);
  return out;
}

Interval iv_phi(Bits bits) {
  const Interval one = Interval::exact(1, bits);
  const Interval two = Interval::exact(2, bits);
  return iv_div(iv_add(one, iv_sqrt(Interval::exact(5, bits))), two);
}

}  // namespace complement
