// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#pragma once

#include <functional>

#include "twrep/numerics.hpp"

namespace twrep {

// Collected bound data for one equation family; the linear-form constants,
// the fixed-point transfer values and the final integer caps.
struct BoundReport {
  RealInterval C1;       // step-1 Matveev constant, < 3.73e11
  RealInterval C2;       // step-2 Matveev constant, < 1.44e11
  Integer gap_bound = 0;      // theorem-chain gap cap (pre-reduction)
  Integer step2_n_bound = 0;  // theorem-chain n cap via the lm -> n relation
  RealInterval H;        // fixed-point seed of the L < 2^l H (log H)^l transfer
  RealInterval L_bound;  // transferred bound on L = n + 1.6
  Integer n_max = 0;
  Integer lm_max = 0;
};

// log of the naive height of a reduced rational: log max(|num|, den).
RealInterval log_height_rational(const Rational& x, long bits);

// 1.4·30^(s+3)·s^4.5·D²·(1+log D)·extra, as an enclosure.
RealInterval matveev_constant(int s, int D, const Rational& extra, long bits);

// Certified bound 2^l·H·(log H)^l on any L with L < H·(log L)^l.
// Requires H > (4l²)^l; throws std::domain_error otherwise.
RealInterval log_power_transfer(long l, const RealInterval& H);

// Largest n admitted by the strict inequality n < 2.5·m·log g (sum) or
// n < 1.5·l·log g (diff).
Integer relation_n_from_m(const Integer& b, const Integer& g, const Integer& m, Mode mode);

// Largest m (sum; l for diff) admitted by the strict inequality
// m < 1.3·(n+1.6)·log b/log g + offset, offset 1 for sum and 2 for diff.
Integer relation_m_from_n(const Integer& b, const Integer& g, const Integer& n, Mode mode);

// Display variant: ceiling of the same bound (the table convention for the
// per-base m-cap row).
Integer relation_m_from_n_display(const Integer& b, const Integer& g, const Integer& n,
                                  Mode mode);

struct TheoremBounds {
  Integer n_max;
  Integer lm_max;
};

// Upward-rounded closed-form caps: sum n < 2.08e29·log³g·log²b·log²max,
// l,m < 2.71e29·log²g·log³b·log²max; diff analogues 2.19e29 / 2.85e29.
TheoremBounds theorem_bounds(const Integer& b, const Integer& g, Mode mode);

// 3.73e11·(1+log(2.5·cap·log g))·log b·log max{b,g} (sum; 1.5 for diff).
RealInterval intermediate_gap_bound(const Integer& b, const Integer& g, const Integer& cap,
                                    Mode mode, long bits);

// The fixed-point seed value H for the theorem chain (1.35e25 sum,
// 1.42e25 diff, times log³g·log²b·log max).
RealInterval theorem_chain_H(const Integer& b, const Integer& g, Mode mode, long bits);

// Full bound assembly for one equation family.
BoundReport bound_report(const Integer& b, const Integer& g, Mode mode);

// Certified rounding ladders over an interval-valued expression, escalating
// working precision internally (256..16384 bits).
// strict_floor_of: largest integer strictly below the value (throws
// PrecisionExhausted when the value sits on an integer).
// ceil_sup_of: certified ceiling, falling back to the ceiling of the upper
// endpoint (sound for upper bounds).
Integer strict_floor_of(const std::function<RealInterval(long)>& f);
Integer ceil_sup_of(const std::function<RealInterval(long)>& f);

}  // namespace twrep
