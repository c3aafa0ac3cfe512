// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <variant>

#include "twrep/contfrac.hpp"

namespace twrep {

// Instance of the reduction lemma: for 0 < w <= M and 0 <= m <= M the
// inequality  |m*tau - n + mu| < A * B^(-w)  is examined against a convergent
// p/q of tau with q > 6M.
struct ReductionProblem {
  RefinableReal tau;  // irrational > 0
  RefinableReal mu;   // real
  Rational A;         // > 0
  Rational B;         // > 1
  Integer M;          // >= 1, bound on the multiplier m
};

enum class ConvergentStrategy { FirstAboveSixM, RetryNext };

struct ReductionOptions {
  ConvergentStrategy strategy = ConvergentStrategy::FirstAboveSixM;
  int retry_steps = 0;  // RetryNext: advance up to this many extra convergents seeking eps > 0
  // Caller-supplied first convergent above 6M for this problem's tau (an
  // amortization for batches sharing tau and M). Must genuinely be the first
  // convergent of tau with q > 6M; ignored when q <= 6M.
  std::optional<Convergent> preseeded;
};

// eps > 0 certified: no solution with w > w_max (and m <= M).
struct BoundOnW {
  Integer w_max;
  Convergent used;
  int attempts = 0;
};

// eps <= 0 (or undecided): unconditional threshold, no residual multiplier.
struct NoCandidate {
  Integer w_threshold;
  Integer m0;  // the excluded multiplier (> M)
  Integer r;
  Convergent used;
  int attempts = 0;
};

// eps <= 0 (or undecided): unconditional threshold except possibly m == m0.
struct Candidate {
  Integer m0;  // 0 <= m0 <= M
  Integer r;
  Integer w_threshold;
  Convergent used;
  int attempts = 0;
};

using ReductionOutcome = std::variant<BoundOnW, NoCandidate, Candidate>;

// Signals mu degenerate for this instance: a residual candidate with exactly
// vanishing linear form that the inequality cannot contradict. Never occurs
// for the shipped problem family; raised rather than guessed around.
struct DegenerateMu : std::runtime_error {
  explicit DegenerateMu(const std::string& what) : std::runtime_error(what) {}
};

// eps = ||mu*q|| - M*||tau*q|| as an enclosure; nullopt while either nearest-
// integer distance is indeterminate at this precision.
std::optional<RealInterval> compute_epsilon(const ReductionProblem& pr, const Convergent& c,
                                            long bits);

ReductionOutcome apply_reduction(const ReductionProblem& pr, const PrecisionPolicy& pol,
                                 const ReductionOptions& opts = {});

enum class IneqCheck { Holds, Fails };

// Does some integer n satisfy |m*tau - n + mu| < A*B^(-w)? Decided against
// the nearest integer; an exactly vanishing form compares the next-nearest
// distance 1 against the right-hand side.
IneqCheck check_candidate_inequality(const ReductionProblem& pr, const Integer& m,
                                     const Integer& w, const PrecisionPolicy& pol);

// Certified nearest integer to m*tau + mu.
Integer companion_integer(const ReductionProblem& pr, const Integer& m,
                          const PrecisionPolicy& pol);

// Exact decision of  m*tau - c + mu == 0.  true/false when symbolically
// decidable, nullopt otherwise (mixed transcendence the payload cannot settle).
std::optional<bool> exact_zero_combination(const RefinableReal& tau, const RefinableReal& mu,
                                           const Integer& m, const Integer& c);

}  // namespace twrep
