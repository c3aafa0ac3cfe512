// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twrep/base.hpp"

namespace twrep {

// Closed interval [lo, hi] with MPFR endpoints, rounded outward (RNDD for lo,
// RNDU for hi) so the true real value is always enclosed. Endpoint precision
// is fixed per value; binary operations work at the max of the operand
// precisions.
class RealInterval {
 public:
  RealInterval();                       // [0, 0] at 64 bits
  explicit RealInterval(long bits);     // [0, 0] at given precision
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  RealInterval& operator=(RealInterval&& o) noexcept;
  ~RealInterval();

  static RealInterval from_integer(const Integer& v, long bits);
  static RealInterval from_rational(const Rational& v, long bits);
  // Natural log of a positive rational. Throws std::domain_error for x <= 0.
  static RealInterval log_of(const Rational& x, long bits);
  // Square root of a nonnegative integer.
  static RealInterval sqrt_of(const Integer& k, long bits);

  long bits() const { return bits_; }

  RealInterval add(const RealInterval& o) const;
  RealInterval sub(const RealInterval& o) const;
  RealInterval mul(const RealInterval& o) const;
  RealInterval div(const RealInterval& o) const;  // throws if o may contain 0
  RealInterval neg() const;
  RealInterval abs() const;
  RealInterval exp() const;
  // log of this interval; requires certified-positive lower endpoint
  RealInterval log() const;
  RealInterval mul_integer(const Integer& k) const;
  RealInterval add_integer(const Integer& k) const;

  // Certified comparisons against exact values.
  bool certainly_less(const Rational& x) const;     // hi < x
  bool certainly_greater(const Rational& x) const;  // lo > x
  bool certainly_less(const RealInterval& o) const; // hi < o.lo
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains_zero() const;

  Rational lo_rational() const;  // exact dyadic value of lo endpoint
  Rational hi_rational() const;  // exact dyadic value of hi endpoint
  double lo_double() const;
  double hi_double() const;
  Rational width() const { return hi_rational() - lo_rational(); }

  std::string to_string(int digits = 20) const;

  const mpfr_t& lo_raw() const { return lo_; }
  const mpfr_t& hi_raw() const { return hi_; }
  mpfr_t& lo_raw() { return lo_; }
  mpfr_t& hi_raw() { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  long bits_;
};

// Sign of the enclosed value: Positive if lo > 0, Negative if hi < 0,
// Ambiguous when the interval straddles or touches zero.
Sign compare_zero(const RealInterval& x);

// Distance from the enclosed value to the nearest integer, as an interval,
// when both endpoints round to the same nearest integer; nullopt
// (Indeterminate) otherwise. The result is clamped to [0, 1/2].
std::optional<RealInterval> nearest_integer_distance(const RealInterval& x);

// floor(x + 1/2) when certified (both exact dyadic endpoints agree);
// nullopt when the interval straddles a half-integer boundary.
std::optional<Integer> floor_nearest(const RealInterval& x);

// Certified ceil/floor of the enclosed value; nullopt when the endpoints
// disagree (value too close to an integer for this precision).
std::optional<Integer> certified_ceil(const RealInterval& x);
std::optional<Integer> certified_floor(const RealInterval& x);

// Partial factorization by trial division up to `limit`; cofactor holds
// whatever remains (1 when fully factored).
struct Factorization {
  std::vector<std::pair<Integer, long>> primes;
  Integer cofactor;
};
Factorization factor_trial(const Integer& n, unsigned long limit = 1000000);

// Exponent of p in n (n != 0).
long valuation(const Integer& n, const Integer& p);

}  // namespace twrep
