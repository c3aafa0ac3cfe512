// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace twrep {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Mode { Sum, Diff };

enum class Sign { Negative, Positive, Ambiguous };

// Escalation schedule for interval precision. All certified operations start
// at initial_bits and multiply by escalation (a rational > 1) until max_bits.
struct PrecisionPolicy {
  long initial_bits = 1024;
  long max_bits = 16384;
  long escalation_num = 2;
  long escalation_den = 1;

  long next(long bits) const {
    long up = static_cast<long>((static_cast<double>(bits) * escalation_num) / escalation_den);
    if (up <= bits) up = bits + 64;
    return up > max_bits ? max_bits : up;
  }
  bool exhausted(long bits) const { return bits >= max_bits; }

  // Environment overrides: TWREP_INITIAL_BITS, TWREP_MAX_BITS, TWREP_ESCALATION (integer factor).
  static PrecisionPolicy from_env() {
    PrecisionPolicy p;
    if (const char* s = std::getenv("TWREP_INITIAL_BITS")) p.initial_bits = std::atol(s);
    if (const char* s = std::getenv("TWREP_MAX_BITS")) p.max_bits = std::atol(s);
    if (const char* s = std::getenv("TWREP_ESCALATION")) p.escalation_num = std::atol(s);
    if (p.initial_bits < 16) p.initial_bits = 16;
    if (p.max_bits < p.initial_bits) p.max_bits = p.initial_bits;
    if (p.escalation_num <= p.escalation_den) { p.escalation_num = 2; p.escalation_den = 1; }
    return p;
  }
};

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer pow_int(const Integer& base, const Integer& e) {
  if (e < 0 || !e.fits_ulong_p()) throw std::overflow_error("pow_int exponent out of range");
  return pow_int(base, e.get_ui());
}

inline Integer pow10_int(unsigned long e) { return pow_int(10, e); }

}  // namespace twrep
