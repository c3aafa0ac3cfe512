// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "twrep/base.hpp"

namespace twrep {

// One Diophantine equation instance: (b + base_sign)·b^n + const_sign equated
// with d1·R_g(l) + d2·R_g(m) (Sum) or d1·R_g(l) − d2·R_g(m) (Diff).
struct EquationSpec {
  Integer b;
  Integer g;
  int base_sign = 1;   // +1 or -1
  int const_sign = 1;  // +1 or -1
  Mode mode = Mode::Sum;
};

struct SolutionTuple {
  Integer d1, d2;  // digits in [1, g-1]
  Integer l, m;    // repdigit lengths >= 1
  Integer n;       // exponent >= 0

  // lexicographic by (n, m, l, d1, d2): the output order contract
  bool operator<(const SolutionTuple& o) const {
    if (n != o.n) return n < o.n;
    if (m != o.m) return m < o.m;
    if (l != o.l) return l < o.l;
    if (d1 != o.d1) return d1 < o.d1;
    return d2 < o.d2;
  }
  bool operator==(const SolutionTuple& o) const {
    return d1 == o.d1 && d2 == o.d2 && l == o.l && m == o.m && n == o.n;
  }
};

// Infinite solution family. Kinds A/B/C are the classified sum families
// ((2,g−1,1,t,kt), (d1,g−1−d1,t,t,kt), (1,g−2,t,t+1,t)); kind P covers the
// remaining power-lattice lines that arise when b and g share a base.
struct FamilyDescriptor {
  enum class Kind { A, B, C, P };
  Kind kind;
  Integer k;   // lattice exponent parameter (A/B: g = 2^k; P: see generator)
  Integer d1;  // kind B/P: fixed first digit
  std::function<SolutionTuple(const Integer&)> generator;  // t >= 1
  std::string label;
};

struct IntRange {
  Integer lo, hi;  // inclusive; empty when lo > hi
};

struct SearchBox {
  IntRange n_range, l_range, m_range, d1_range, d2_range;
  // Optional per-exponent refinement: admissible l, m additionally capped by
  // lm_cap(n). Empty function = flat ranges only.
  std::function<Integer(const Integer&)> lm_cap;
};

struct CapTooLarge : std::runtime_error {
  explicit CapTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// (g^m - 1)/(g - 1), exact.
Integer repunit(const Integer& g, const Integer& m);

// (b + base_sign)·b^n + const_sign, exact.
Integer lhs_value(const EquationSpec& spec, const Integer& n);

// Exact verification of one tuple against the equation.
bool check_solution(const EquationSpec& spec, const SolutionTuple& t);

// The classified infinite families matching this spec (kinds A/B/C only).
std::vector<FamilyDescriptor> detect_families(const EquationSpec& spec);

// The t-th member of a family, t >= 1.
SolutionTuple family_member(const FamilyDescriptor& f, const Integer& t);

// All canonical solutions inside the box, minus exact members of the excluded
// families, sorted by (n, m, l, d1, d2).  Canonical: Sum l <= m with both
// digit orders listed at l = m; Diff m <= l.
std::vector<SolutionTuple> enumerate_box(const EquationSpec& spec, const SearchBox& box,
                                         const std::vector<FamilyDescriptor>& exclude);

// Independent naive re-enumeration (no shared helpers, direct power
// evaluation). Budget-limited: throws CapTooLarge above ~10^7 tuples.
std::vector<SolutionTuple> oracle_enumerate(const EquationSpec& spec, const SearchBox& caps);

// Complete solution of the g = 2 case: digits are 1, every solution has
// n = 0, lengths capped by ceil(log2(b+4)).
std::vector<SolutionTuple> solve_g2(const EquationSpec& spec);

}  // namespace twrep
