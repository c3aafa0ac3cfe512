// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#include "twrep/contfrac.hpp"

namespace twrep {

namespace {

// ln(x)/ln(base) as an exact rational u/v, i.e. x^v == base^u, when base is a
// fully factorable integer >= 2. Complete in that regime: dependence forces
// the prime support of x to sit inside that of base, so only the (small)
// base needs factoring. For other bases only x == 1 and x == base are caught.
std::optional<Rational> power_witness(const Rational& x, const Rational& base) {
  if (x == 1) return Rational(0);
  if (x == base) return Rational(1);
  if (!(base.get_den() == 1 && base.get_num() > 1)) return std::nullopt;
  Factorization f = factor_trial(Integer(base.get_num()));
  if (f.cofactor != 1) return std::nullopt;  // could not fully factor: stay silent
  Integer num(x.get_num()), den(x.get_den());
  // strip x by the primes of base; anything left means independence
  Rational ratio;  // common value of v_p(x)/v_p(base)
  bool have_ratio = false;
  for (const auto& [p, e] : f.primes) {
    long vx = valuation(num, p) - valuation(den, p);
    Rational r = Rational(Integer(vx)) / Rational(Integer(e));
    if (!have_ratio) {
      ratio = r;
      have_ratio = true;
    } else if (r != ratio) {
      return std::nullopt;  // valuation vectors not parallel: independent
    }
    Integer tmp;
    mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    num = tmp;
    mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    den = tmp;
  }
  if (num != 1 || den != 1) return std::nullopt;  // primes outside base's support
  return ratio;
}

}  // namespace

RefinableReal RefinableReal::of_rational(const Rational& v) {
  RefinableReal r;
  r.kind_ = Kind::RationalValue;
  r.x_ = v;
  r.witness_ = v;
  return r;
}

RefinableReal RefinableReal::log_ratio(const Rational& x, const Rational& base) {
  if (sgn(x) <= 0 || sgn(base) <= 0) throw std::domain_error("log_ratio: nonpositive argument");
  if (base == 1) throw std::domain_error("log_ratio: base 1");
  RefinableReal r;
  r.kind_ = Kind::LogRatio;
  r.x_ = x;
  r.base_ = base;
  r.witness_ = power_witness(x, base);
  return r;
}

RefinableReal RefinableReal::sqrt_int(const Integer& k) {
  if (sgn(k) < 0) throw std::domain_error("sqrt_int: negative argument");
  RefinableReal r;
  r.kind_ = Kind::SqrtInt;
  r.k_ = k;
  if (mpz_perfect_square_p(k.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), k.get_mpz_t());
    r.witness_ = Rational(s);
  }
  return r;
}

RefinableReal RefinableReal::opaque(std::function<RealInterval(long)> eval) {
  RefinableReal r;
  r.kind_ = Kind::Opaque;
  r.eval_ = std::move(eval);
  return r;
}

RealInterval RefinableReal::eval(long bits) const {
  switch (kind_) {
    case Kind::RationalValue:
      return RealInterval::from_rational(x_, bits);
    case Kind::LogRatio: {
      RealInterval num = RealInterval::log_of(x_, bits + 16);
      RealInterval den = RealInterval::log_of(base_, bits + 16);
      return num.div(den);
    }
    case Kind::SqrtInt:
      return RealInterval::sqrt_of(k_, bits);
    case Kind::Opaque:
      return eval_(bits);
  }
  throw std::logic_error("RefinableReal: bad kind");
}

namespace {

Integer rat_floor(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return f;
}

// Common prefix of the continued fractions of the two endpoints. Terms agreed
// on by both endpoints are certified terms of any value inside the interval.
std::vector<Integer> cf_common_prefix(Rational lo, Rational hi, long max_terms) {
  std::vector<Integer> out;
  while (static_cast<long>(out.size()) < max_terms) {
    Integer flo = rat_floor(lo);
    Integer fhi = rat_floor(hi);
    if (flo != fhi) break;
    out.push_back(flo);
    Rational frac_lo = lo - Rational(flo);
    Rational frac_hi = hi - Rational(flo);
    if (sgn(frac_lo) == 0 || sgn(frac_hi) == 0) break;
    Rational nlo = 1 / frac_hi;  // reciprocal reverses order
    Rational nhi = 1 / frac_lo;
    lo = nlo;
    hi = nhi;
  }
  return out;
}

}  // namespace

std::vector<Integer> cf_partial_quotients(const RefinableReal& x, long count,
                                          const PrecisionPolicy& pol) {
  if (x.rationality_witness())
    throw std::domain_error("cf_partial_quotients: value is rational");
  long bits = pol.initial_bits;
  for (;;) {
    RealInterval I = x.eval(bits);
    auto pref = cf_common_prefix(I.lo_rational(), I.hi_rational(), count);
    if (static_cast<long>(pref.size()) >= count) return pref;
    if (pol.exhausted(bits))
      throw PrecisionExhausted("cf_partial_quotients: endpoints disagree at max_bits");
    bits = pol.next(bits);
  }
}

std::vector<Convergent> cf_convergents(const RefinableReal& x, long count,
                                       const PrecisionPolicy& pol) {
  std::vector<Integer> a = cf_partial_quotients(x, count, pol);
  std::vector<Convergent> out;
  out.reserve(a.size());
  Integer p1 = 1, p2 = 0;  // p_{k-1}, p_{k-2}
  Integer q1 = 0, q2 = 1;
  for (size_t k = 0; k < a.size(); ++k) {
    Integer p = a[k] * p1 + p2;
    Integer q = a[k] * q1 + q2;
    out.push_back(Convergent{p, q, static_cast<long>(k)});
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return out;
}

Convergent first_convergent_above(const RefinableReal& x, const Integer& threshold,
                                  const PrecisionPolicy& pol) {
  for (long count = 32; count <= 1 << 20; count *= 2) {
    auto cs = cf_convergents(x, count, pol);
    for (const auto& c : cs)
      if (c.q > threshold) return c;
  }
  throw PrecisionExhausted("first_convergent_above: denominators grow too slowly");
}

Convergent next_convergent(const Convergent& c, const RefinableReal& x,
                           const PrecisionPolicy& pol) {
  auto cs = cf_convergents(x, c.index + 2, pol);
  if (static_cast<long>(cs.size()) <= c.index + 1)
    throw PrecisionExhausted("next_convergent: expansion too short");
  return cs[c.index + 1];
}

}  // namespace twrep
