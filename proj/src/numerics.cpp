// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#include "twrep/numerics.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace twrep {

RealInterval::RealInterval() : RealInterval(64) {}

RealInterval::RealInterval(long bits) : bits_(bits < 2 ? 2 : bits) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : bits_(o.bits_) {
  mpfr_init2(lo_, bits_);
  mpfr_init2(hi_, bits_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : bits_(o.bits_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.bits_);
    mpfr_set_prec(hi_, o.bits_);
    bits_ = o.bits_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(bits_, o.bits_);
  }
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::from_integer(const Integer& v, long bits) {
  RealInterval r(bits);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_rational(const Rational& v, long bits) {
  RealInterval r(bits);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::log_of(const Rational& x, long bits) {
  if (sgn(x) <= 0) throw std::domain_error("log_of: nonpositive argument");
  RealInterval t = from_rational(x, bits + 8);
  RealInterval r(bits);
  mpfr_log(r.lo_, t.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, t.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::sqrt_of(const Integer& k, long bits) {
  if (sgn(k) < 0) throw std::domain_error("sqrt_of: negative argument");
  RealInterval t = from_integer(k, bits + 8);
  RealInterval r(bits);
  mpfr_sqrt(r.lo_, t.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, t.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::add(const RealInterval& o) const {
  RealInterval r(std::max(bits_, o.bits_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::sub(const RealInterval& o) const {
  RealInterval r(std::max(bits_, o.bits_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::mul(const RealInterval& o) const {
  RealInterval r(std::max(bits_, o.bits_));
  mpfr_t t;
  mpfr_init2(t, r.bits_);
  // lower endpoint: min of the four products rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // upper endpoint: max of the four products rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::div(const RealInterval& o) const {
  if (o.contains_zero()) throw std::domain_error("div: denominator interval contains zero");
  RealInterval r(std::max(bits_, o.bits_));
  mpfr_t t;
  mpfr_init2(t, r.bits_);
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::neg() const {
  RealInterval r(bits_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::abs() const {
  RealInterval r(bits_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return neg();
  // straddles zero: [0, max(|lo|, hi)]
  mpfr_set_zero(r.lo_, 1);
  mpfr_t t;
  mpfr_init2(t, bits_);
  mpfr_neg(t, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, t, hi_, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::exp() const {
  RealInterval r(bits_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log: interval not certified positive");
  RealInterval r(bits_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::mul_integer(const Integer& k) const {
  RealInterval r(bits_);
  if (sgn(k) >= 0) {
    mpfr_mul_z(r.lo_, lo_, k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_, hi_, k.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(r.lo_, hi_, k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_, lo_, k.get_mpz_t(), MPFR_RNDU);
  }
  return r;
}

RealInterval RealInterval::add_integer(const Integer& k) const {
  RealInterval r(bits_);
  mpfr_add_z(r.lo_, lo_, k.get_mpz_t(), MPFR_RNDD);
  mpfr_add_z(r.hi_, hi_, k.get_mpz_t(), MPFR_RNDU);
  return r;
}

bool RealInterval::certainly_less(const Rational& x) const {
  return mpfr_cmp_q(hi_, x.get_mpq_t()) < 0;
}

bool RealInterval::certainly_greater(const Rational& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) > 0;
}

bool RealInterval::certainly_less(const RealInterval& o) const {
  return mpfr_less_p(hi_, o.lo_) != 0;
}

bool RealInterval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealInterval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool RealInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

Rational RealInterval::lo_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational RealInterval::hi_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double RealInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string RealInterval::to_string(int digits) const {
  char* s = nullptr;
  // midpoint display; callers needing certified output use the endpoints
  mpfr_t mid;
  mpfr_init2(mid, bits_);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
  mpfr_asprintf(&s, "%.*Rg", digits, mid);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(mid);
  return out;
}

Sign compare_zero(const RealInterval& x) {
  if (x.certainly_positive()) return Sign::Positive;
  if (x.certainly_negative()) return Sign::Negative;
  return Sign::Ambiguous;
}

std::optional<RealInterval> nearest_integer_distance(const RealInterval& x) {
  long bits = x.bits();
  mpfr_t rlo, rhi;
  mpfr_init2(rlo, bits);
  mpfr_init2(rhi, bits);
  mpfr_rint(rlo, x.lo_raw(), MPFR_RNDN);
  mpfr_rint(rhi, x.hi_raw(), MPFR_RNDN);
  bool same = mpfr_equal_p(rlo, rhi) != 0;
  if (!same) {
    mpfr_clear(rlo);
    mpfr_clear(rhi);
    return std::nullopt;
  }
  // both endpoints have the same nearest integer k = rlo
  RealInterval d(bits);
  mpfr_t a, b2;
  mpfr_init2(a, bits);
  mpfr_init2(b2, bits);
  // |lo - k| and |hi - k|, rounded both ways
  mpfr_sub(a, x.lo_raw(), rlo, MPFR_RNDD);   // lo - k (may be negative)
  mpfr_sub(b2, x.hi_raw(), rlo, MPFR_RNDU);  // hi - k
  // distance interval over [lo-k, hi-k]
  if (mpfr_sgn(a) <= 0 && mpfr_sgn(b2) >= 0) {
    // zero is inside: d.lo = 0
    mpfr_set_zero(d.lo_raw(), 1);
    mpfr_t na;
    mpfr_init2(na, bits);
    mpfr_neg(na, a, MPFR_RNDU);
    mpfr_max(d.hi_raw(), na, b2, MPFR_RNDU);
    mpfr_clear(na);
  } else if (mpfr_sgn(a) >= 0) {
    // entirely right of k
    mpfr_sub(d.lo_raw(), x.lo_raw(), rlo, MPFR_RNDD);
    mpfr_set(d.hi_raw(), b2, MPFR_RNDU);
  } else {
    // entirely left of k
    mpfr_sub(a, x.hi_raw(), rlo, MPFR_RNDU);  // hi - k <= 0
    mpfr_neg(d.lo_raw(), a, MPFR_RNDD);
    mpfr_sub(a, x.lo_raw(), rlo, MPFR_RNDD);
    mpfr_neg(d.hi_raw(), a, MPFR_RNDU);
  }
  // clamp upper endpoint to 1/2 (true distance never exceeds it)
  mpfr_t half;
  mpfr_init2(half, bits);
  mpfr_set_ui_2exp(half, 1, -1, MPFR_RNDN);
  mpfr_min(d.hi_raw(), d.hi_raw(), half, MPFR_RNDU);
  if (mpfr_sgn(d.lo_raw()) < 0) mpfr_set_zero(d.lo_raw(), 1);
  mpfr_clear(half);
  mpfr_clear(a);
  mpfr_clear(b2);
  mpfr_clear(rlo);
  mpfr_clear(rhi);
  return d;
}

std::optional<Integer> floor_nearest(const RealInterval& x) {
  Rational a = x.lo_rational() + Rational(1, 2);
  Rational b = x.hi_rational() + Rational(1, 2);
  Integer fa, fb;
  mpz_fdiv_q(fa.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  mpz_fdiv_q(fb.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
  if (fa != fb) return std::nullopt;
  return fa;
}

std::optional<Integer> certified_ceil(const RealInterval& x) {
  Rational a = x.lo_rational();
  Rational b = x.hi_rational();
  Integer ca, cb;
  mpz_cdiv_q(ca.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  mpz_cdiv_q(cb.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
  if (ca != cb) return std::nullopt;
  return ca;
}

std::optional<Integer> certified_floor(const RealInterval& x) {
  Rational a = x.lo_rational();
  Rational b = x.hi_rational();
  Integer fa, fb;
  mpz_fdiv_q(fa.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  mpz_fdiv_q(fb.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
  if (fa != fb) return std::nullopt;
  return fa;
}

Factorization factor_trial(const Integer& n, unsigned long limit) {
  Factorization f;
  f.cofactor = n < 0 ? Integer(-n) : n;
  if (f.cofactor == 0) return f;
  auto strip = [&](const Integer& p) {
    long e = 0;
    while (mpz_divisible_p(f.cofactor.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(f.cofactor.get_mpz_t(), f.cofactor.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) f.primes.emplace_back(p, e);
  };
  strip(2);
  // composite p never divides: its prime factors were already stripped
  for (Integer p = 3; p <= static_cast<long>(limit) && p * p <= f.cofactor; p += 2) strip(p);
  if (f.cofactor > 1 && mpz_probab_prime_p(f.cofactor.get_mpz_t(), 40) != 0) {
    f.primes.emplace_back(f.cofactor, 1);
    f.cofactor = 1;
  }
  return f;
}

long valuation(const Integer& n, const Integer& p) {
  Integer tmp;
  return static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace twrep
