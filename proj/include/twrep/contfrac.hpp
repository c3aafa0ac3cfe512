// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twrep/numerics.hpp"

namespace twrep {

// Raised when max_bits is reached without the endpoints agreeing on the next
// partial quotient (or without resolving whatever certified decision was
// requested). For continued fractions this usually signals that the value is
// rational, which callers must rule out before expanding.
struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A real number that can be evaluated to a certified enclosure at any
// requested precision. Carries a symbolic tag so exact decisions (rationality,
// vanishing of integer combinations) can be made without floating point.
class RefinableReal {
 public:
  enum class Kind { Opaque, RationalValue, LogRatio, SqrtInt };

  static RefinableReal of_rational(const Rational& v);
  // ln(x)/ln(base), x > 0, base > 0 and base != 1.
  static RefinableReal log_ratio(const Rational& x, const Rational& base);
  // sqrt(k) for a nonnegative integer k.
  static RefinableReal sqrt_int(const Integer& k);
  static RefinableReal opaque(std::function<RealInterval(long)> eval);

  RealInterval eval(long bits) const;
  Kind kind() const { return kind_; }

  // Exact rational value when the number is provably rational
  // (RationalValue always; LogRatio when x is an exact integer power of base
  // or vice versa; SqrtInt when k is a perfect square).
  const std::optional<Rational>& rationality_witness() const { return witness_; }

  // Symbolic payload (valid for the corresponding kind only).
  const Rational& lr_x() const { return x_; }
  const Rational& lr_base() const { return base_; }
  const Integer& sqrt_arg() const { return k_; }

 private:
  RefinableReal() = default;
  Kind kind_ = Kind::Opaque;
  Rational x_;
  Rational base_;
  Integer k_;
  std::optional<Rational> witness_;
  std::function<RealInterval(long)> eval_;
};

struct Convergent {
  Integer p;
  Integer q;
  long index = 0;  // k for p_k / q_k
};

// First `count` partial quotients of the continued fraction of x, certified by
// endpoint agreement with escalation. Throws std::domain_error when x has a
// rationality witness, PrecisionExhausted when agreement cannot be reached.
std::vector<Integer> cf_partial_quotients(const RefinableReal& x, long count,
                                          const PrecisionPolicy& pol);

// Convergents p_k/q_k for the first `count` quotients.
std::vector<Convergent> cf_convergents(const RefinableReal& x, long count,
                                       const PrecisionPolicy& pol);

// Smallest-index convergent with q > threshold.
Convergent first_convergent_above(const RefinableReal& x, const Integer& threshold,
                                  const PrecisionPolicy& pol);

// The convergent of index c.index + 1.
Convergent next_convergent(const Convergent& c, const RefinableReal& x,
                           const PrecisionPolicy& pol);

}  // namespace twrep
