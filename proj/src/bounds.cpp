// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#include "twrep/bounds.hpp"

#include <functional>
#include <stdexcept>

#include "twrep/contfrac.hpp"

namespace twrep {

namespace {

RealInterval ln_int(const Integer& v, long bits) {
  return RealInterval::log_of(Rational(v), bits);
}

RealInterval pow_interval(const RealInterval& x, long e) {
  RealInterval r = RealInterval::from_integer(1, x.bits());
  for (long i = 0; i < e; ++i) r = r.mul(x);
  return r;
}

Integer max_bg(const Integer& b, const Integer& g) { return b > g ? b : g; }

}  // namespace

// Strict-floor: largest integer strictly below the enclosed value, certified
// by an internal escalation ladder (the inputs are short log expressions).
Integer strict_floor_of(const std::function<RealInterval(long)>& f) {
  for (long bits = 256; bits <= 16384; bits *= 2) {
    RealInterval x = f(bits);
    if (auto c = certified_ceil(x)) return *c - 1;
  }
  throw PrecisionExhausted("strict_floor_of: bound sits on an integer");
}

Integer ceil_sup_of(const std::function<RealInterval(long)>& f) {
  for (long bits = 256; bits <= 16384; bits *= 2) {
    RealInterval x = f(bits);
    if (auto c = certified_ceil(x)) return *c;
  }
  // conservative: ceiling of the upper endpoint at the last precision
  RealInterval x = f(16384);
  Rational hi = x.hi_rational();
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
  return c;
}

RealInterval log_height_rational(const Rational& x, long bits) {
  if (sgn(x) == 0) throw std::domain_error("log_height_rational: zero input");
  Integer num(x.get_num());
  if (num < 0) num = -num;
  const Integer den(x.get_den());
  return ln_int(num > den ? num : den, bits);
}

RealInterval matveev_constant(int s, int D, const Rational& extra, long bits) {
  if (s < 1 || D < 1 || sgn(extra) <= 0)
    throw std::domain_error("matveev_constant: bad arguments");
  RealInterval r = RealInterval::from_rational(Rational(7, 5), bits);
  r = r.mul_integer(pow_int(30, static_cast<unsigned long>(s) + 3));
  // s^4.5 = sqrt(s^9)
  r = r.mul(RealInterval::sqrt_of(pow_int(s, 9), bits));
  r = r.mul_integer(Integer(D) * D);
  RealInterval one_log_d =
      RealInterval::from_integer(1, bits).add(ln_int(D, bits));
  r = r.mul(one_log_d);
  return r.mul(RealInterval::from_rational(extra, bits));
}

RealInterval log_power_transfer(long l, const RealInterval& H) {
  if (l < 1) throw std::domain_error("log_power_transfer: l < 1");
  Integer limit = pow_int(4 * l * l, static_cast<unsigned long>(l));
  if (!H.certainly_greater(Rational(limit)))
    throw std::domain_error("log_power_transfer: H <= (4l^2)^l");
  RealInterval r = H.mul_integer(pow_int(2, static_cast<unsigned long>(l)));
  return r.mul(pow_interval(H.log(), l));
}

Integer relation_n_from_m(const Integer& b, const Integer& g, const Integer& m, Mode mode) {
  (void)b;
  Rational coeff = mode == Mode::Sum ? Rational(5, 2) : Rational(3, 2);
  return strict_floor_of([&](long bits) {
    return ln_int(g, bits).mul_integer(m).mul(RealInterval::from_rational(coeff, bits));
  });
}

namespace {

RealInterval m_from_n_value(const Integer& b, const Integer& g, const Integer& n, Mode mode,
                            long bits) {
  Rational npl = Rational(10 * n + 16) / 10;  // n + 1.6
  RealInterval r = RealInterval::from_rational(Rational(13, 10) * npl, bits);
  r = r.mul(ln_int(b, bits)).div(ln_int(g, bits));
  return r.add_integer(mode == Mode::Sum ? 1 : 2);
}

}  // namespace

Integer relation_m_from_n(const Integer& b, const Integer& g, const Integer& n, Mode mode) {
  return strict_floor_of([&](long bits) { return m_from_n_value(b, g, n, mode, bits); });
}

Integer relation_m_from_n_display(const Integer& b, const Integer& g, const Integer& n,
                                  Mode mode) {
  return ceil_sup_of([&](long bits) { return m_from_n_value(b, g, n, mode, bits); });
}

TheoremBounds theorem_bounds(const Integer& b, const Integer& g, Mode mode) {
  const Integer mx = max_bg(b, g);
  const Integer cn = (mode == Mode::Sum ? Integer(208) : Integer(219)) * pow_int(10, 27);
  const Integer clm = (mode == Mode::Sum ? Integer(271) : Integer(285)) * pow_int(10, 27);
  auto shape = [&](const Integer& c, long pg, long pb) {
    return ceil_sup_of([&, c, pg, pb](long bits) {
      RealInterval r = RealInterval::from_integer(c, bits);
      r = r.mul(pow_interval(ln_int(g, bits), pg));
      r = r.mul(pow_interval(ln_int(b, bits), pb));
      return r.mul(pow_interval(ln_int(mx, bits), 2));
    });
  };
  TheoremBounds tb;
  tb.n_max = shape(cn, 3, 2);
  tb.lm_max = shape(clm, 2, 3);
  return tb;
}

RealInterval intermediate_gap_bound(const Integer& b, const Integer& g, const Integer& cap,
                                    Mode mode, long bits) {
  if (cap < 1) throw std::domain_error("intermediate_gap_bound: cap < 1");
  Rational coeff = mode == Mode::Sum ? Rational(5, 2) : Rational(3, 2);
  RealInterval inner =
      ln_int(g, bits).mul_integer(cap).mul(RealInterval::from_rational(coeff, bits));
  RealInterval r = RealInterval::from_integer(1, bits).add(inner.log());
  r = r.mul_integer(Integer(373) * pow_int(10, 9));
  r = r.mul(ln_int(b, bits));
  return r.mul(ln_int(max_bg(b, g), bits));
}

RealInterval theorem_chain_H(const Integer& b, const Integer& g, Mode mode, long bits) {
  const Integer c = (mode == Mode::Sum ? Integer(135) : Integer(142)) * pow_int(10, 23);
  RealInterval r = RealInterval::from_integer(c, bits);
  r = r.mul(pow_interval(ln_int(g, bits), 3));
  r = r.mul(pow_interval(ln_int(b, bits), 2));
  return r.mul(ln_int(max_bg(b, g), bits));
}

BoundReport bound_report(const Integer& b, const Integer& g, Mode mode) {
  const long bits = 256;
  BoundReport r;
  r.C1 = matveev_constant(3, 1, Rational(13, 5), bits);
  r.C2 = matveev_constant(3, 1, Rational(1), bits);
  TheoremBounds tb = theorem_bounds(b, g, mode);
  r.n_max = tb.n_max;
  r.lm_max = tb.lm_max;
  r.H = theorem_chain_H(b, g, mode, bits);
  r.L_bound = log_power_transfer(2, r.H);
  Rational gb_hi = intermediate_gap_bound(b, g, tb.lm_max, mode, bits).hi_rational();
  mpz_cdiv_q(r.gap_bound.get_mpz_t(), gb_hi.get_num().get_mpz_t(), gb_hi.get_den().get_mpz_t());
  r.step2_n_bound = relation_n_from_m(b, g, tb.lm_max, mode);
  return r;
}

}  // namespace twrep
