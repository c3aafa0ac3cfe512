// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#include "twrep/solver.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

namespace twrep {

namespace {

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// n = a^r with r maximal (a not itself a perfect power).
std::pair<Integer, Integer> primitive_root(const Integer& n) {
  Factorization f = factor_trial(n);
  if (f.cofactor != 1) return {n, 1};  // conservatively opaque; never at desk scale
  Integer r = 0;
  for (const auto& [p, e] : f.primes) r = (r == 0) ? Integer(e) : int_gcd(r, Integer(e));
  if (r <= 1) return {n, 1};
  Integer a = 1;
  for (const auto& [p, e] : f.primes) a *= pow_int(p, Integer(Integer(e) / r));
  return {a, r};
}

void validate_spec(const EquationSpec& spec) {
  if (spec.b < 2 || spec.g < 2) throw std::domain_error("spec: b and g must be >= 2");
  if (spec.base_sign * spec.base_sign != 1 || spec.const_sign * spec.const_sign != 1)
    throw std::domain_error("spec: signs must be +1 or -1");
}

// ceil(g^3/(g-1)): the generic step-1 numerator (112 at g = 10).
Integer step1_sum_numerator(const Integer& g) {
  Integer c;
  Integer num = pow_int(g, 3ul);
  Integer den = g - 1;
  mpz_cdiv_q(c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return c;
}

// Rational upper bound on num/ln(arg) (arg >= 2), tight to ~2^-500.
Rational rational_upper_over_log(const Integer& num, const Integer& arg) {
  RealInterval ln = RealInterval::log_of(Rational(arg), 512);
  return Rational(num) / ln.lo_rational();
}

// Diff cells of the g = 10 grid all reduce against one flat M (the b = 12
// value, the largest); outside that grid the per-instance theorem cap is used.
Integer diff_reduction_M(const Integer& b, const Integer& g) {
  if (g == 10 && b >= 2 && b <= 12) return theorem_bounds(12, 10, Mode::Diff).lm_max;
  return theorem_bounds(b, g, Mode::Diff).lm_max;
}

Integer max_int(const Integer& a, const Integer& b) { return a > b ? a : b; }
Integer min_int(const Integer& a, const Integer& b) { return a < b ? a : b; }

std::string describe_problem(const Rational& x, const Integer& logbase, const Rational& A,
                             const Rational& B, const Integer& M) {
  std::ostringstream o;
  o << "mu=ln(" << x.get_num().get_str() << "/" << x.get_den().get_str() << ")/ln("
    << logbase.get_str() << ") A~" << A.get_d() << " B=" << B.get_num().get_str()
    << " M=" << M.get_str();
  return o.str();
}

// DegenerateMu iff the vacuous zero-form inequality 1 < A*B^-(thr+1) would
// hold, i.e. A > B^(thr+1). Provably false for thresholds of the shipped
// problem family; guarded rather than assumed.
void degenerate_guard(const ReductionProblem& pr, const Integer& thr) {
  Integer e = thr + 1;
  if (e > 1000) return;  // B >= 2: B^e astronomically exceeds A
  Rational lhs = pr.A;
  Rational rhs = 1;
  Integer k = e;
  if (k >= 0) {
    for (Integer i = 0; i < k; ++i) rhs *= pr.B;
  } else {
    for (Integer i = 0; i < -k; ++i) lhs *= pr.B;
  }
  if (lhs > rhs)
    throw DegenerateMu("reduction candidate with exactly vanishing form and vacuous threshold");
}

struct CaseOutcome {
  Integer w;
  CaseTrace trace;
};

// One Baker-Davenport reduction with candidate resolution. step 1:
// pinned scan from the threshold while the inequality holds (the companion is
// the other exponent, structurally > w). step 2: the candidate forces
// w = companion - offset exactly.
CaseOutcome resolve_case(const ReductionProblem& pr, int step, const Integer& offset,
                         const PrecisionPolicy& pol, const ReductionOptions& opts, CaseTrace t) {
  ReductionOutcome out = apply_reduction(pr, pol, opts);
  Integer w;
  if (const auto* a = std::get_if<BoundOnW>(&out)) {
    t.outcome = "eps_positive";
    t.epsilon_sign = +1;
    t.attempts = a->attempts;
    t.resolution = Resolution::BoundAccepted;
    w = a->w_max;
  } else if (const auto* nc = std::get_if<NoCandidate>(&out)) {
    t.outcome = "no_candidate";
    t.epsilon_sign = -1;
    t.attempts = nc->attempts;
    t.resolution = Resolution::BoundAccepted;
    t.m0 = nc->m0;
    w = nc->w_threshold;
  } else {
    const Candidate& cd = std::get<Candidate>(out);
    t.outcome = "candidate";
    t.epsilon_sign = -1;
    t.attempts = cd.attempts;
    t.m0 = cd.m0;
    const Integer thr = cd.w_threshold;
    const Integer c = companion_integer(pr, cd.m0, pol);
    t.companion = c;
    auto z = exact_zero_combination(pr.tau, pr.mu, cd.m0, c);
    if (z && *z) {
      degenerate_guard(pr, thr);
      t.resolution = Resolution::CandidateContradiction;
      w = thr;
    } else if (step == 1) {
      Integer last = thr;
      Integer ws = thr + 1;
      while (ws <= c - 1 &&
             check_candidate_inequality(pr, cd.m0, ws, pol) == IneqCheck::Holds) {
        last = ws;
        ++ws;
        if (ws > thr + 2000) throw std::runtime_error("step-1 pinned scan did not terminate");
      }
      t.resolution = last > thr ? Resolution::CandidatePinned : Resolution::CandidateContradiction;
      w = last;
    } else {
      const Integer wf = c - offset;
      if (wf > thr && check_candidate_inequality(pr, cd.m0, wf, pol) == IneqCheck::Holds) {
        t.resolution = Resolution::CandidatePinned;
        w = wf;
      } else {
        t.resolution = Resolution::CandidateContradiction;
        w = thr;
      }
    }
  }
  t.w_bound = w;
  return CaseOutcome{w, std::move(t)};
}

}  // namespace

std::optional<MultDep> multiplicative_dependence(const Integer& b, const Integer& g) {
  if (b < 2 || g < 2) throw std::domain_error("multiplicative_dependence: inputs must be >= 2");
  auto [ab, rb] = primitive_root(b);
  auto [ag, rg] = primitive_root(g);
  if (ab != ag) return std::nullopt;
  return MultDep{ab, rb, rg};
}

StepResult step1_gap(const EquationSpec& spec, const PrecisionPolicy& pol,
                     const ReductionOptions& opts) {
  validate_spec(spec);
  if (spec.g < 3) throw std::domain_error("step1_gap: requires g >= 3");
  if (multiplicative_dependence(spec.b, spec.g))
    throw std::domain_error("step1_gap: log b/log g is rational; use direct_scan");
  const Integer b = spec.b, g = spec.g;

  Rational A;
  Integer M;
  if (spec.mode == Mode::Sum) {
    A = rational_upper_over_log(step1_sum_numerator(g), g);
    M = theorem_bounds(b, g, Mode::Sum).n_max;
  } else {
    A = rational_upper_over_log(2, g);
    M = diff_reduction_M(b, g);
  }
  const Rational B(g);
  RefinableReal tau = RefinableReal::log_ratio(Rational(b), Rational(g));
  ReductionOptions local = opts;
  local.preseeded = first_convergent_above(tau, 6 * M, pol);

  const Integer V = (g - 1) * (b + spec.base_sign);
  StepResult res;
  res.bound = -1;
  for (Integer d = 1; d <= g - 1; ++d) {
    const Rational x = Rational(V) / Rational(d);
    ReductionProblem pr{tau, RefinableReal::log_ratio(x, Rational(g)), A, B, M};
    CaseTrace t;
    t.step = StepKind::GapReduction;
    t.base_sign = spec.base_sign;
    t.d2 = d;
    t.problem = describe_problem(x, g, A, B, M);
    CaseOutcome co = resolve_case(pr, 1, 0, pol, local, std::move(t));
    res.bound = max_int(res.bound, co.w);
    res.traces.push_back(std::move(co.trace));
  }
  return res;
}

StepResult step2_n(const EquationSpec& spec, const Integer& gap_max, const PrecisionPolicy& pol,
                   const ReductionOptions& opts) {
  validate_spec(spec);
  if (spec.g < 3) throw std::domain_error("step2_n: requires g >= 3");
  if (multiplicative_dependence(spec.b, spec.g))
    throw std::domain_error("step2_n: log g/log b is rational; use direct_scan");
  const Integer b = spec.b, g = spec.g;

  const Rational A = rational_upper_over_log(2, b);
  const Rational B(b);
  const Integer M = spec.mode == Mode::Sum ? theorem_bounds(b, g, Mode::Sum).lm_max
                                           : diff_reduction_M(b, g);
  RefinableReal tau = RefinableReal::log_ratio(Rational(g), Rational(b));
  ReductionOptions local = opts;
  local.preseeded = first_convergent_above(tau, 6 * M, pol);

  const Integer V = (g - 1) * (b + spec.base_sign);
  const Integer offset = spec.mode == Mode::Sum ? 2 : 1;
  const Integer gap_hi =
      spec.mode == Mode::Sum ? max_int(gap_max, 2) : max_int(gap_max + 2, 2);

  StepResult res;
  res.bound = -1;
  for (Integer gap = 0; gap <= gap_hi; ++gap) {
    const Integer gpow = pow_int(g, gap);
    for (Integer d1 = 1; d1 <= g - 1; ++d1) {
      for (Integer d2 = 1; d2 <= g - 1; ++d2) {
        CaseTrace t;
        t.step = StepKind::NReduction;
        t.base_sign = spec.base_sign;
        t.d1 = d1;
        t.d2 = d2;
        t.gap = gap;
        if (spec.mode == Mode::Diff && gap == 0 && d1 <= d2) {
          // d1*R(l) - d2*R(l) <= 0 < lhs: verified non-solution, no reduction
          t.outcome = "screened";
          t.resolution = Resolution::BoundAccepted;
          t.w_bound = -1;
          t.problem = "nonpositive mu argument";
          res.traces.push_back(std::move(t));
          continue;
        }
        const Integer num =
            spec.mode == Mode::Sum ? Integer(d1 + d2 * gpow) : Integer(d1 * gpow - d2);
        const Rational x = Rational(num) / Rational(V);
        ReductionProblem pr{tau, RefinableReal::log_ratio(x, Rational(b)), A, B, M};
        t.problem = describe_problem(x, b, A, B, M);
        CaseOutcome co = resolve_case(pr, 2, offset, pol, local, std::move(t));
        res.bound = max_int(res.bound, co.w);
        res.traces.push_back(std::move(co.trace));
      }
    }
  }
  return res;
}

namespace {

// x = a^h for integer h (a >= 2), else nullopt.
std::optional<Integer> power_of_base(const Rational& x, const Integer& a) {
  Integer num(x.get_num()), den(x.get_den());
  if (num <= 0) return std::nullopt;
  auto powchk = [&](Integer v) -> std::optional<Integer> {
    Integer e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), a.get_mpz_t())) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t());
      ++e;
    }
    if (v == 1) return e;
    return std::nullopt;
  };
  if (num == 1 && den == 1) return Integer(0);
  if (den == 1) return powchk(num);
  if (num == 1) {
    auto e = powchk(den);
    if (e) return Integer(-*e);
    return std::nullopt;
  }
  return std::nullopt;
}

// Largest integer strictly below log(Acoef/dist(ln x, Z*ln a))/log(Bbase):
// the off-lattice branch of the direct scan.
Integer w_from_lattice_distance(const Rational& x, const Integer& a, const Integer& Acoef,
                                const Integer& Bbase, const PrecisionPolicy& pol) {
  // certify the nearest lattice index first
  Integer j;
  bool have_j = false;
  for (long bits = 256; bits <= 1 << 20; bits *= 2) {
    RealInterval t = RealInterval::log_of(x, bits).div(RealInterval::log_of(Rational(a), bits));
    if (auto fj = floor_nearest(t)) {
      j = *fj;
      have_j = true;
      break;
    }
  }
  if (!have_j) throw PrecisionExhausted("direct scan: nearest lattice index undecided");
  (void)pol;
  for (long bits = 256; bits <= 1 << 20; bits *= 2) {
    RealInterval d = RealInterval::log_of(x, bits)
                         .sub(RealInterval::log_of(Rational(a), bits).mul_integer(j))
                         .abs();
    if (!d.certainly_positive()) continue;
    RealInterval X = RealInterval::log_of(Rational(Acoef), bits)
                         .sub(d.log())
                         .div(RealInterval::log_of(Rational(Bbase), bits));
    if (auto c = certified_ceil(X)) return *c - 1;
  }
  throw PrecisionExhausted("direct scan: lattice distance bound undecided");
}

// Largest integer strictly below log(Acoef/ln a)/log(Bbase): the bound for
// on-lattice cases whose form cannot vanish.
Integer w_from_log_floor(const Integer& a, const Integer& Acoef, const Integer& Bbase) {
  return strict_floor_of([&](long bits) {
    return RealInterval::log_of(Rational(Acoef), bits)
        .sub(RealInterval::log_of(Rational(a), bits).log())
        .div(RealInterval::log_of(Rational(Bbase), bits));
  });
}

bool same_family(const FamilyDescriptor& f, const FamilyDescriptor& h) {
  for (int t = 1; t <= 3; ++t)
    if (!(family_member(f, t) == family_member(h, t))) return false;
  return true;
}

// sigma-lattice family: d1 + d2 = g-1, const_sign = -1, and
// (d1 + d2 g^gap)/V = a^h, giving V b^n = (d1 + d2 g^gap) g^l exactly on the
// progression n = (l*e_g + h)/e_b.
std::optional<FamilyDescriptor> build_sigma_family(const EquationSpec& spec, const MultDep& md,
                                                   const Integer& d1, const Integer& d2,
                                                   const Integer& gap, const Integer& h) {
  const Integer eb = md.e_b, eg = md.e_g;
  const Integer step = eb / int_gcd(eb, eg);
  Integer l0 = 0;
  for (Integer l = 1; l <= eb + step; ++l) {
    Integer num = l * eg + h;
    if (num % eb == 0 && num / eb >= 0) {
      l0 = l;
      break;
    }
  }
  if (l0 == 0) return std::nullopt;  // exponent progression has no integral point
  FamilyDescriptor f;
  f.kind = FamilyDescriptor::Kind::P;
  f.k = h;
  f.d1 = d1;
  {
    std::ostringstream lab;
    lab << "P(d1=" << d1.get_str() << ",d2=" << d2.get_str() << ",gap=" << gap.get_str() << ")";
    f.label = lab.str();
  }
  f.generator = [d1, d2, gap, l0, step, eb, eg, h](const Integer& t) {
    Integer l = l0 + (t - 1) * step;
    return SolutionTuple{d1, d2, l, l + gap, (l * eg + h) / eb};
  };
  for (int t = 1; t <= 3; ++t)
    if (!check_solution(spec, family_member(f, t)))
      throw std::logic_error("sigma family failed verification: " + f.label);
  return f;
}

// Fixed-l family from a step-1 lattice zero: V b^n = d2 g^m with l pinned to 1
// and d1 = const_sign + 1 (only b = 2, -, + instances exist; derived, not
// assumed).
std::optional<FamilyDescriptor> build_fixed_l_family(const EquationSpec& spec, const MultDep& md,
                                                     const Integer& d2, const Integer& h) {
  const Integer g = spec.g;
  // l = 1 digit equation: d1*(g-1) = d2 + (g-1)*const_sign
  Integer rhs = d2 + (g - 1) * spec.const_sign;
  if (rhs <= 0 || rhs % (g - 1) != 0) return std::nullopt;
  Integer d1 = rhs / (g - 1);
  if (d1 < 1 || d1 > g - 1) return std::nullopt;
  // progression over n: m = (h + n*e_b)/e_g
  const Integer eb = md.e_b, eg = md.e_g;
  const Integer step = eg / int_gcd(eb, eg);
  Integer n0 = -1;
  for (Integer n = 0; n <= eg + step; ++n) {
    Integer num = h + n * eb;
    if (num % eg == 0 && num / eg >= 1) {
      n0 = n;
      break;
    }
  }
  if (n0 < 0) return std::nullopt;
  FamilyDescriptor f;
  f.kind = FamilyDescriptor::Kind::P;
  f.k = h;
  f.d1 = d1;
  {
    std::ostringstream lab;
    lab << "P(l=1,d1=" << d1.get_str() << ",d2=" << d2.get_str() << ")";
    f.label = lab.str();
  }
  f.generator = [d1, d2, n0, step, eb, eg, h](const Integer& t) {
    Integer n = n0 + (t - 1) * step;
    return SolutionTuple{d1, d2, 1, (h + n * eb) / eg, n};
  };
  for (int t = 1; t <= 3; ++t)
    if (!check_solution(spec, family_member(f, t)))
      throw std::logic_error("fixed-l family failed verification: " + f.label);
  return f;
}

}  // namespace

DirectScanResult direct_scan(const EquationSpec& spec, const PrecisionPolicy& pol) {
  validate_spec(spec);
  if (spec.g < 3) throw std::domain_error("direct_scan: requires g >= 3");
  auto md = multiplicative_dependence(spec.b, spec.g);
  if (!md) throw std::domain_error("direct_scan: log b/log g is irrational; use the reduction");
  const Integer b = spec.b, g = spec.g, a = md->a;
  const Integer V = (g - 1) * (b + spec.base_sign);
  DirectScanResult R;

  {
    std::ostringstream o;
    o << "multiplicatively dependent bases: b = " << a.get_str() << "^" << md->e_b.get_str()
      << ", g = " << a.get_str() << "^" << md->e_g.get_str() << "; bounds from direct lattice scan";
    R.flags.push_back(o.str());
  }

  // ---- step-1 scan over the single digit ----
  const Integer Acoef1 = spec.mode == Mode::Sum ? step1_sum_numerator(g) : Integer(2);
  R.gap_max = -1;
  for (Integer d = 1; d <= g - 1; ++d) {
    const Rational x = Rational(V) / Rational(d);
    CaseTrace t;
    t.step = StepKind::GapReduction;
    t.base_sign = spec.base_sign;
    t.d2 = d;
    auto h = power_of_base(x, a);
    if (!h) {
      t.outcome = "scan";
      t.resolution = Resolution::BoundAccepted;
      t.w_bound = w_from_lattice_distance(x, a, Acoef1, g, pol);
    } else {
      t.outcome = "lattice";
      t.resolution = Resolution::BoundAccepted;
      t.w_bound = w_from_log_floor(a, Acoef1, g);
      if (spec.mode == Mode::Sum) {
        if (auto f = build_fixed_l_family(spec, *md, d, *h)) {
          R.power_families.push_back(*f);
          R.flags.push_back("lattice zero in the gap scan: infinite family " + f->label);
        } else {
          R.flags.push_back("gap-scan lattice case d=" + d.get_str() +
                            ": digit equation unsolvable; vanishing form impossible");
        }
      } else {
        R.flags.push_back("gap-scan lattice case d=" + d.get_str() +
                          ": vanishing form impossible (diff constant terms)");
      }
    }
    R.gap_max = max_int(R.gap_max, t.w_bound);
    R.traces.push_back(std::move(t));
  }

  // ---- step-2 scan over (d1, d2, gap) ----
  const Integer gap_scan = spec.mode == Mode::Sum ? max_int(R.gap_max, 2)
                                                  : max_int(R.gap_max + 2, 2);
  // sigma families provably live at gap <= log_g((g-1)^2 (b+1)); scan a hair
  // further than both ranges
  Integer fam_gap_hi = 3;
  {
    Integer pow = 1;
    while (pow < b + 1) {
      pow *= g;
      ++fam_gap_hi;
    }
  }
  const Integer scan_hi =
      spec.mode == Mode::Sum ? max_int(gap_scan, fam_gap_hi) : gap_scan;
  R.n_w_max = -1;
  for (Integer gap = 0; gap <= scan_hi; ++gap) {
    const Integer gpow = pow_int(g, gap);
    for (Integer d1 = 1; d1 <= g - 1; ++d1) {
      for (Integer d2 = 1; d2 <= g - 1; ++d2) {
        if (spec.mode == Mode::Diff && gap == 0 && d1 <= d2) continue;  // nonpositive
        const Integer num =
            spec.mode == Mode::Sum ? Integer(d1 + d2 * gpow) : Integer(d1 * gpow - d2);
        const Rational x = Rational(num) / Rational(V);
        auto h = power_of_base(x, a);
        const bool in_bound_range = gap <= gap_scan;
        CaseTrace t;
        t.step = StepKind::NReduction;
        t.base_sign = spec.base_sign;
        t.d1 = d1;
        t.d2 = d2;
        t.gap = gap;
        if (!h) {
          if (!in_bound_range) continue;  // beyond the gap bound: solutions ruled out by step 1
          t.outcome = "scan";
          t.resolution = Resolution::BoundAccepted;
          t.w_bound = w_from_lattice_distance(x, a, 2, b, pol);
        } else {
          t.outcome = "lattice";
          t.resolution = Resolution::BoundAccepted;
          t.w_bound = w_from_log_floor(a, 2, b);
          const bool sigma = spec.mode == Mode::Sum && spec.const_sign == -1 && d1 + d2 == g - 1;
          if (sigma) {
            if (auto f = build_sigma_family(spec, *md, d1, d2, gap, *h)) {
              bool dup = false;
              for (const auto& e : R.power_families) dup = dup || same_family(*f, e);
              if (!dup) {
                R.power_families.push_back(*f);
                R.flags.push_back("lattice zero in the n scan: infinite family " + f->label);
              }
            } else {
              R.flags.push_back("n-scan lattice case (" + d1.get_str() + "," + d2.get_str() +
                                ",gap=" + gap.get_str() + "): no integral exponent progression");
            }
          } else {
            R.flags.push_back("n-scan lattice near-miss (" + d1.get_str() + "," + d2.get_str() +
                              ",gap=" + gap.get_str() +
                              "): constant terms differ, no solutions beyond the box");
          }
        }
        if (in_bound_range) R.n_w_max = max_int(R.n_w_max, t.w_bound);
        R.traces.push_back(std::move(t));
      }
    }
  }
  return R;
}

namespace {

Integer ceil_log2(const Integer& x) {
  Integer r(static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)));
  if (mpz_popcount(x.get_mpz_t()) == 1) r -= 1;
  return r;
}

void fill_counts(SolverReport& R) {
  SolverCounts c;
  for (const auto& s : R.solutions) {
    if (s.n == 0)
      ++c.n_eq_0;
    else
      ++c.n_ge_1;
    c.max_l = max_int(c.max_l, s.l);
    c.max_m = max_int(c.max_m, s.m);
    c.max_n = max_int(c.max_n, s.n);
  }
  R.counts = c;
}

}  // namespace

SolverReport solve(const EquationSpec& spec, const PrecisionPolicy& pol,
                   const SolveOptions& opts) {
  validate_spec(spec);
  SolverReport R;
  R.spec = spec;
  R.theorem = bound_report(spec.b, spec.g, spec.mode);
  R.families = detect_families(spec);

  if (spec.g == 2) {
    const Integer Lmax = ceil_log2(spec.b + 4);
    R.final_box = SearchBox{{0, 0}, {1, Lmax}, {1, Lmax}, {1, 1}, {1, 1}, nullptr};
    R.solutions = solve_g2(spec);
    if (spec.b == 2 && spec.mode == Mode::Diff && spec.base_sign == -1 &&
        spec.const_sign == -1) {
      FamilyDescriptor f;
      f.kind = FamilyDescriptor::Kind::P;
      f.k = 0;
      f.d1 = 1;
      f.label = "P(1,1,t,t,0)";
      f.generator = [](const Integer& t) { return SolutionTuple{1, 1, t, t, 0}; };
      R.families.push_back(std::move(f));
      R.flags.push_back(
          "degenerate cell: the left side vanishes at n=0, giving the infinite family "
          "(1,1,t,t,0); the solution list is truncated to the box");
    }
    R.flags.push_back("g=2: parity forces n=0; lengths capped by ceil(log2(b+4))");
    fill_counts(R);
    return R;
  }

  auto md = multiplicative_dependence(spec.b, spec.g);
  if (md) {
    DirectScanResult ds = direct_scan(spec, pol);
    R.used_direct_scan = true;
    R.step1_gap_max = ds.gap_max;
    R.step2_n_max = ds.n_w_max;
    R.traces = std::move(ds.traces);
    for (const auto& fl : ds.flags) R.flags.push_back(fl);
    for (const auto& f : ds.power_families) {
      bool dup = false;
      for (const auto& e : R.families) dup = dup || same_family(f, e);
      if (!dup) R.families.push_back(f);
    }
    if (!(spec.b == spec.g && spec.g == 10))
      R.flags.push_back("off-grid dependent cell: bounds certified by direct lattice scan");
  } else {
    StepResult s1 = step1_gap(spec, pol, opts.reduction);
    StepResult s2 = step2_n(spec, s1.bound, pol, opts.reduction);
    R.step1_gap_max = s1.bound;
    R.step2_n_max = s2.bound;
    R.traces = std::move(s1.traces);
    for (auto& t : s2.traces) R.traces.push_back(std::move(t));
  }
  if (!opts.keep_all_traces) {
    std::vector<CaseTrace> kept;
    for (auto& t : R.traces)
      if (t.outcome == "candidate" || t.outcome == "lattice") kept.push_back(std::move(t));
    R.traces = std::move(kept);
  }

  // box composition: n capped by the reduction result (never below the
  // unconditional small-n floor), lengths by the value relation at each n
  const Integer offset = spec.mode == Mode::Sum ? Integer(2) : Integer(1);
  Integer n_cap = min_int(R.theorem.n_max, R.step2_n_max + offset);
  n_cap = max_int(n_cap, 2);
  Integer lm_flat = min_int(R.theorem.lm_max, relation_m_from_n(spec.b, spec.g, n_cap, spec.mode));
  lm_flat = max_int(lm_flat, 1);

  R.final_box.n_range = {0, n_cap};
  R.final_box.l_range = {1, lm_flat};
  R.final_box.m_range = {1, lm_flat};
  R.final_box.d1_range = {1, spec.g - 1};
  R.final_box.d2_range = {1, spec.g - 1};
  {
    const Integer b = spec.b, g = spec.g, flat = lm_flat;
    const Mode mode = spec.mode;
    R.final_box.lm_cap = [b, g, flat, mode](const Integer& n) {
      return min_int(flat, relation_m_from_n(b, g, n, mode));
    };
  }

  R.solutions = enumerate_box(spec, R.final_box, R.families);
  fill_counts(R);
  for (const auto& f : R.families)
    R.flags.push_back("infinite family " + f.label + ": members excluded from the solution list");
  return R;
}

std::vector<CellReport> run_suite(const Integer& b_lo, const Integer& b_hi, const Integer& g,
                                  const std::vector<Mode>& modes, const PrecisionPolicy& pol,
                                  const SolveOptions& opts) {
  static const int kSigns[4][2] = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
  std::vector<CellReport> cells;
  for (Mode mode : modes) {
    for (Integer b = b_lo; b <= b_hi; ++b) {
      CellReport cell;
      cell.b = b;
      cell.g = g;
      cell.mode = mode;
      for (const auto& sg : kSigns) {
        EquationSpec spec{b, g, sg[0], sg[1], mode};
        std::string tag = std::string("[") + (sg[0] > 0 ? "+" : "-") + "," +
                          (sg[1] > 0 ? "+" : "-") + "] ";
        try {
          SolverReport rep = solve(spec, pol, opts);
          cell.gap_row = max_int(cell.gap_row, rep.step1_gap_max);
          cell.nw_row = max_int(cell.nw_row, rep.step2_n_max);
          cell.counts.n_eq_0 += rep.counts.n_eq_0;
          cell.counts.n_ge_1 += rep.counts.n_ge_1;
          cell.counts.max_l = max_int(cell.counts.max_l, rep.counts.max_l);
          cell.counts.max_m = max_int(cell.counts.max_m, rep.counts.max_m);
          cell.counts.max_n = max_int(cell.counts.max_n, rep.counts.max_n);
          for (const auto& s : rep.solutions)
            cell.solutions.push_back(SignedSolution{sg[0], sg[1], s});
          for (const auto& fl : rep.flags) cell.flags.push_back(tag + fl);
          cell.parts.push_back(std::move(rep));
          cell.errors.push_back("");
        } catch (const std::exception& e) {
          SolverReport failed;
          failed.spec = spec;
          cell.parts.push_back(std::move(failed));
          cell.errors.push_back(e.what());
          cell.flags.push_back(tag + std::string("failed: ") + e.what());
        }
      }
      if (cell.nw_row >= 0) {
        cell.n_cap = cell.nw_row + (mode == Mode::Sum ? 2 : 1);
        if (mode == Mode::Sum) cell.ml_b = relation_m_from_n_display(b, g, cell.n_cap, mode);
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace twrep
