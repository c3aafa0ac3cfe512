// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#include "twrep/reduction.hpp"

#include <algorithm>
#include <vector>

namespace twrep {

namespace {

void validate(const ReductionProblem& pr) {
  if (sgn(pr.A) <= 0) throw std::domain_error("reduction: A must be positive");
  if (pr.B <= 1) throw std::domain_error("reduction: B must exceed 1");
  if (pr.M < 1) throw std::domain_error("reduction: M must be >= 1");
}

Integer ceil_of(const Rational& x) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return c;
}

Integer floor_of(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return f;
}

// Largest integer strictly below log(Aq/eps)/log(B), escalating until the
// ceiling is certified; falls back to the sound upper-endpoint ceiling.
Integer part_a_wmax(const ReductionProblem& pr, const Convergent& c, const PrecisionPolicy& pol) {
  Rational Aq = pr.A * Rational(c.q);
  long bits = pol.initial_bits;
  for (;;) {
    auto eps = compute_epsilon(pr, c, bits);
    if (eps && eps->certainly_positive()) {
      RealInterval X = RealInterval::from_rational(Aq, bits)
                           .div(*eps)
                           .log()
                           .div(RealInterval::log_of(pr.B, bits));
      if (auto ce = certified_ceil(X)) return *ce - 1;
      if (pol.exhausted(bits)) return ceil_of(X.hi_rational()) - 1;
    } else if (pol.exhausted(bits)) {
      throw PrecisionExhausted("part_a_wmax: epsilon sign lost at max bits");
    }
    bits = pol.next(bits);
  }
}

// floor(mu*q + 1/2), exactly when mu is provably rational, else by escalation.
Integer compute_r(const ReductionProblem& pr, const Convergent& c, const PrecisionPolicy& pol) {
  if (auto w = pr.mu.rationality_witness()) return floor_of(*w * Rational(c.q) + Rational(1, 2));
  long bits = pol.initial_bits;
  for (;;) {
    if (auto r = floor_nearest(pr.mu.eval(bits).mul_integer(c.q))) return *r;
    if (pol.exhausted(bits)) throw PrecisionExhausted("compute_r: mu*q sits on a half-integer");
    bits = pol.next(bits);
  }
}

// floor(log(3Aq)/log B), certified with a sound upper fallback.
Integer compute_threshold(const ReductionProblem& pr, const Convergent& c,
                          const PrecisionPolicy& pol) {
  Rational arg = 3 * pr.A * Rational(c.q);
  long bits = pol.initial_bits;
  for (;;) {
    RealInterval X =
        RealInterval::log_of(arg, bits).div(RealInterval::log_of(pr.B, bits));
    if (auto fl = certified_floor(X)) return *fl;
    if (pol.exhausted(bits)) return floor_of(X.hi_rational());
    bits = pol.next(bits);
  }
}

// Residual multiplier: the unique m0 in [0, q) with p*m0 == -r (mod q).
Integer residual_multiplier(const Convergent& c, const Integer& r) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), c.p.get_mpz_t(), c.q.get_mpz_t()) == 0)
    throw std::logic_error("residual_multiplier: convergent p, q not coprime");
  Integer m0 = ((-r) % c.q) * inv % c.q;
  if (m0 < 0) m0 += c.q;
  return m0;
}

}  // namespace

std::optional<RealInterval> compute_epsilon(const ReductionProblem& pr, const Convergent& c,
                                            long bits) {
  RealInterval tq = pr.tau.eval(bits).mul_integer(c.q);
  RealInterval uq = pr.mu.eval(bits).mul_integer(c.q);
  auto dt = nearest_integer_distance(tq);
  auto du = nearest_integer_distance(uq);
  if (!dt || !du) return std::nullopt;
  return du->sub(dt->mul_integer(pr.M));
}

ReductionOutcome apply_reduction(const ReductionProblem& pr, const PrecisionPolicy& pol,
                                 const ReductionOptions& opts) {
  validate(pr);
  if (pr.tau.rationality_witness())
    throw std::domain_error("apply_reduction: tau is rational");

  std::vector<Convergent> tries;
  if (opts.preseeded && opts.preseeded->q > 6 * pr.M)
    tries.push_back(*opts.preseeded);
  else
    tries.push_back(first_convergent_above(pr.tau, 6 * pr.M, pol));
  if (opts.strategy == ConvergentStrategy::RetryNext)
    for (int k = 0; k < opts.retry_steps; ++k)
      tries.push_back(next_convergent(tries.back(), pr.tau, pol));

  int attempt = 0;
  for (const auto& c : tries) {
    ++attempt;
    Sign s = Sign::Ambiguous;
    long bits = pol.initial_bits;
    for (;;) {
      if (auto e = compute_epsilon(pr, c, bits)) {
        s = compare_zero(*e);
        if (s != Sign::Ambiguous) break;
      }
      if (pol.exhausted(bits)) break;  // undecided at max bits: treat as not positive
      bits = pol.next(bits);
    }
    if (s == Sign::Positive) return BoundOnW{part_a_wmax(pr, c, pol), c, attempt};
  }

  // No convergent certified eps > 0: unconditional branch on the first one.
  const Convergent& c = tries.front();
  Integer r = compute_r(pr, c, pol);
  Integer thr = compute_threshold(pr, c, pol);
  Integer m0 = residual_multiplier(c, r);
  int attempts = static_cast<int>(tries.size());
  if (m0 > pr.M) return NoCandidate{thr, m0, r, c, attempts};
  return Candidate{m0, r, thr, c, attempts};
}

IneqCheck check_candidate_inequality(const ReductionProblem& pr, const Integer& m,
                                     const Integer& w, const PrecisionPolicy& pol) {
  validate(pr);
  long bits = pol.initial_bits;
  for (;;) {
    RealInterval lnrhs = RealInterval::log_of(pr.A, bits)
                             .sub(RealInterval::log_of(pr.B, bits).mul_integer(w));
    RealInterval form = pr.tau.eval(bits).mul_integer(m).add(pr.mu.eval(bits));
    if (auto d = nearest_integer_distance(form)) {
      if (d->certainly_positive()) {
        RealInterval lnd = d->log();
        if (lnd.certainly_less(lnrhs)) return IneqCheck::Holds;
        if (lnrhs.certainly_less(lnd)) return IneqCheck::Fails;
      } else if (auto c = floor_nearest(form)) {
        auto z = exact_zero_combination(pr.tau, pr.mu, m, *c);
        if (z && *z) {
          // the form vanishes: nearest distance 0, next-nearest exactly 1
          Sign sg = compare_zero(lnrhs);
          if (sg == Sign::Positive) return IneqCheck::Holds;  // 1 < A*B^-w
          if (sg == Sign::Negative) return IneqCheck::Fails;
        }
        // certified nonzero (or undecidable): escalation separates it below
      }
    }
    if (pol.exhausted(bits))
      throw PrecisionExhausted("check_candidate_inequality: undecided at max bits");
    bits = pol.next(bits);
  }
}

Integer companion_integer(const ReductionProblem& pr, const Integer& m,
                          const PrecisionPolicy& pol) {
  auto tw = pr.tau.rationality_witness();
  auto uw = pr.mu.rationality_witness();
  if (tw && uw) return floor_of(Rational(m) * *tw + *uw + Rational(1, 2));
  long bits = pol.initial_bits;
  for (;;) {
    RealInterval form = pr.tau.eval(bits).mul_integer(m).add(pr.mu.eval(bits));
    if (auto c = floor_nearest(form)) return *c;
    if (pol.exhausted(bits))
      throw PrecisionExhausted("companion_integer: form sits on a half-integer");
    bits = pol.next(bits);
  }
}

namespace {

bool integer_base_logratio(const RefinableReal& v) {
  return v.kind() == RefinableReal::Kind::LogRatio && v.lr_base().get_den() == 1 &&
         v.lr_base().get_num() > 1;
}

}  // namespace

std::optional<bool> exact_zero_combination(const RefinableReal& tau, const RefinableReal& mu,
                                           const Integer& m, const Integer& c) {
  using K = RefinableReal::Kind;
  auto tw = tau.rationality_witness();
  auto uw = mu.rationality_witness();
  if (tw && uw) return Rational(m) * *tw + *uw == Rational(c);
  if (m == 0) {
    if (uw) return *uw == Rational(c);
    // witness detection is complete for integer-base log ratios and sqrt
    if (integer_base_logratio(mu) || mu.kind() == K::SqrtInt) return false;
    return std::nullopt;
  }
  if (uw) {
    // m*tau == c - mu with tau provably irrational: cannot vanish
    if (integer_base_logratio(tau) || tau.kind() == K::SqrtInt) return false;
    return std::nullopt;
  }
  if (tau.kind() == K::LogRatio && mu.kind() == K::LogRatio && tau.lr_base() == mu.lr_base()) {
    // m*ln(x1) + ln(x2) == c*ln(y)  <=>  x1^m * x2 == y^c, decided on
    // valuations so m and c never appear as exponents of big integers.
    const Rational& x1 = tau.lr_x();
    const Rational& x2 = mu.lr_x();
    const Rational& y = tau.lr_base();
    Factorization fy = factor_trial(Integer(y.get_num() * y.get_den()));
    Factorization f1 = factor_trial(Integer(x1.get_num() * x1.get_den()));
    if (fy.cofactor != 1 || f1.cofactor != 1) return std::nullopt;
    std::vector<Integer> ps;
    for (const auto& [p, e] : fy.primes) ps.push_back(p);
    for (const auto& [p, e] : f1.primes)
      if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
    Integer n2(x2.get_num()), d2(x2.get_den());
    for (const auto& p : ps) {
      Integer tmp;
      mpz_remove(tmp.get_mpz_t(), n2.get_mpz_t(), p.get_mpz_t());
      n2 = tmp;
      mpz_remove(tmp.get_mpz_t(), d2.get_mpz_t(), p.get_mpz_t());
      d2 = tmp;
    }
    if (n2 != 1 || d2 != 1) return false;  // x2 carries a prime outside the lattice
    for (const auto& p : ps) {
      long v1 = valuation(Integer(x1.get_num()), p) - valuation(Integer(x1.get_den()), p);
      long v2 = valuation(Integer(x2.get_num()), p) - valuation(Integer(x2.get_den()), p);
      long vy = valuation(Integer(y.get_num()), p) - valuation(Integer(y.get_den()), p);
      if (m * v1 + v2 != c * vy) return false;
    }
    return true;
  }
  return std::nullopt;
}

}  // namespace twrep
