// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#include "twrep/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <set>
#include <sstream>

namespace twrep {

namespace {
// Mutation-test hook: TWREP_FAULT=repunit corrupts this function so the
// independent oracle paths in `verify` must catch the disagreement.
bool repunit_fault_injected() {
  static const bool on = [] {
    const char* f = std::getenv("TWREP_FAULT");
    return f != nullptr && std::strcmp(f, "repunit") == 0;
  }();
  return on;
}
}  // namespace

Integer repunit(const Integer& g, const Integer& m) {
  if (m <= 0) return 0;
  Integer num = pow_int(g, m) - 1;
  Integer r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), Integer(g - 1).get_mpz_t());
  if (repunit_fault_injected()) return r + 1;
  return r;
}

Integer lhs_value(const EquationSpec& spec, const Integer& n) {
  return (spec.b + spec.base_sign) * pow_int(spec.b, n) + spec.const_sign;
}

bool check_solution(const EquationSpec& spec, const SolutionTuple& t) {
  if (t.d1 < 1 || t.d1 > spec.g - 1) return false;
  if (t.d2 < 1 || t.d2 > spec.g - 1) return false;
  if (t.l < 1 || t.m < 1 || t.n < 0) return false;
  Integer rhs = t.d1 * repunit(spec.g, t.l);
  if (spec.mode == Mode::Sum)
    rhs += t.d2 * repunit(spec.g, t.m);
  else
    rhs -= t.d2 * repunit(spec.g, t.m);
  return lhs_value(spec, t.n) == rhs;
}

namespace {

// g = 2^k with k >= 2, else 0.
Integer power_of_two_exponent(const Integer& g) {
  if (g < 4) return 0;
  if (mpz_popcount(g.get_mpz_t()) != 1) return 0;
  return Integer(mpz_sizeinbase(g.get_mpz_t(), 2)) - 1;
}

}  // namespace

std::vector<FamilyDescriptor> detect_families(const EquationSpec& spec) {
  std::vector<FamilyDescriptor> out;
  if (spec.mode != Mode::Sum) return out;
  const Integer g = spec.g;
  const Integer k = power_of_two_exponent(g);
  if (spec.b == 2 && spec.base_sign == -1 && spec.const_sign == 1 && k >= 2) {
    // 2^(kt) + 1 = 2·R(1) + (g-1)·R(t)
    FamilyDescriptor f;
    f.kind = FamilyDescriptor::Kind::A;
    f.k = k;
    f.d1 = 2;
    f.label = "A";
    f.generator = [g, k](const Integer& t) {
      return SolutionTuple{2, g - 1, 1, t, k * t};
    };
    out.push_back(std::move(f));
  }
  if (spec.b == 2 && spec.base_sign == -1 && spec.const_sign == -1 && k >= 2) {
    // 2^(kt) - 1 = d1·R(t) + (g-1-d1)·R(t), one descriptor per split
    for (Integer d1 = 1; d1 <= g - 2; ++d1) {
      FamilyDescriptor f;
      f.kind = FamilyDescriptor::Kind::B;
      f.k = k;
      f.d1 = d1;
      std::ostringstream lab;
      lab << "B(d1=" << d1.get_str() << ")";
      f.label = lab.str();
      f.generator = [g, k, d1](const Integer& t) {
        return SolutionTuple{d1, g - 1 - d1, t, t, k * t};
      };
      out.push_back(std::move(f));
    }
  }
  if (spec.b == g && g >= 3 && spec.base_sign == -1 && spec.const_sign == -1) {
    // (g-1)·g^t - 1 = R(t) + (g-2)·R(t+1)
    FamilyDescriptor f;
    f.kind = FamilyDescriptor::Kind::C;
    f.k = 1;
    f.d1 = 1;
    f.label = "C";
    f.generator = [g](const Integer& t) {
      return SolutionTuple{1, g - 2, t, t + 1, t};
    };
    out.push_back(std::move(f));
  }
  return out;
}

SolutionTuple family_member(const FamilyDescriptor& f, const Integer& t) {
  return f.generator(t);
}

namespace {

Integer range_hi_clamped(const IntRange& r, const Integer& cap) {
  return std::min(r.hi, cap);
}

}  // namespace

std::vector<SolutionTuple> enumerate_box(const EquationSpec& spec, const SearchBox& box,
                                         const std::vector<FamilyDescriptor>& exclude) {
  const Integer g = spec.g;
  std::set<SolutionTuple> excluded;
  if (!exclude.empty()) {
    Integer tmax = std::max({box.l_range.hi, box.m_range.hi, box.n_range.hi}) + 1;
    for (const auto& f : exclude)
      for (Integer t = 1; t <= tmax; ++t) excluded.insert(family_member(f, t));
  }

  auto d1_ok = [&](const Integer& d) { return d >= box.d1_range.lo && d <= box.d1_range.hi; };
  auto d2_ok = [&](const Integer& d) { return d >= box.d2_range.lo && d <= box.d2_range.hi; };

  std::vector<SolutionTuple> out;
  auto emit = [&](SolutionTuple t) {
    if (excluded.count(t)) return;
    out.push_back(std::move(t));
  };

  for (Integer n = std::max(Integer(0), box.n_range.lo); n <= box.n_range.hi; ++n) {
    const Integer V = lhs_value(spec, n);
    Integer cap = std::max(box.l_range.hi, box.m_range.hi);
    if (box.lm_cap) cap = std::min(cap, box.lm_cap(n));
    if (cap < 1) continue;

    if (spec.mode == Mode::Sum) {
      if (V < 2) continue;
      const Integer m_hi = range_hi_clamped(box.m_range, cap);
      for (Integer m = std::max(Integer(1), box.m_range.lo); m <= m_hi; ++m) {
        const Integer Rm = repunit(g, m);
        if (Rm + 1 > V) break;  // d2·Rm + d1·Rl >= Rm + 1
        const Integer l_hi = std::min(range_hi_clamped(box.l_range, cap), m);
        for (Integer l = std::max(Integer(1), box.l_range.lo); l <= l_hi; ++l) {
          const Integer Rl = repunit(g, l);
          for (Integer d2 = 1; d2 <= g - 1; ++d2) {
            const Integer rest = V - d2 * Rm;
            if (rest < Rl) break;  // rest decreases with d2
            if (!mpz_divisible_p(rest.get_mpz_t(), Rl.get_mpz_t())) continue;
            const Integer d1 = rest / Rl;
            if (d1 > g - 1) continue;
            if (d1_ok(d1) && d2_ok(d2)) emit({d1, d2, l, m, n});
          }
        }
      }
    } else {
      if (V < 0) continue;
      const Integer l_hi = range_hi_clamped(box.l_range, cap);
      for (Integer l = std::max(Integer(1), box.l_range.lo); l <= l_hi; ++l) {
        const Integer Rl = repunit(g, l);
        if ((g - 1) * Rl < V + 1) continue;  // max RHS = (g-1)·Rl - 1 < V
        const Integer m_hi = std::min(range_hi_clamped(box.m_range, cap), l);
        for (Integer m = std::max(Integer(1), box.m_range.lo); m <= m_hi; ++m) {
          const Integer Rm = repunit(g, m);
          for (Integer d1 = 1; d1 <= g - 1; ++d1) {
            const Integer rest = d1 * Rl - V;
            if (rest < Rm) continue;  // needs d2 >= 1 (rest grows with d1)
            if (rest > (g - 1) * Rm) break;
            if (!mpz_divisible_p(rest.get_mpz_t(), Rm.get_mpz_t())) continue;
            const Integer d2 = rest / Rm;
            if (d1_ok(d1) && d2_ok(d2)) emit({d1, d2, l, m, n});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SolutionTuple> oracle_enumerate(const EquationSpec& spec, const SearchBox& caps) {
  // Deliberately naive and self-contained: direct power evaluation, all five
  // loops explicit, no repunit/lhs helpers.
  auto count_of = [](const IntRange& r) {
    return r.hi >= r.lo ? Integer(r.hi - r.lo + 1) : Integer(0);
  };
  Integer budget = count_of(caps.n_range) * count_of(caps.l_range) * count_of(caps.m_range) *
                   count_of(caps.d1_range) * count_of(caps.d2_range);
  if (budget > 10000000) throw CapTooLarge("oracle budget exceeded: " + budget.get_str());

  std::vector<SolutionTuple> out;
  for (Integer n = caps.n_range.lo; n <= caps.n_range.hi; ++n) {
    if (n < 0) continue;
    Integer bpow;
    mpz_pow_ui(bpow.get_mpz_t(), spec.b.get_mpz_t(), n.get_ui());
    const Integer lhs = (spec.b + spec.base_sign) * bpow + spec.const_sign;
    for (Integer l = caps.l_range.lo; l <= caps.l_range.hi; ++l) {
      if (l < 1) continue;
      Integer gl;
      mpz_pow_ui(gl.get_mpz_t(), spec.g.get_mpz_t(), l.get_ui());
      for (Integer m = caps.m_range.lo; m <= caps.m_range.hi; ++m) {
        if (m < 1) continue;
        if (spec.mode == Mode::Sum && l > m) continue;
        if (spec.mode == Mode::Diff && m > l) continue;
        Integer gm;
        mpz_pow_ui(gm.get_mpz_t(), spec.g.get_mpz_t(), m.get_ui());
        for (Integer d1 = caps.d1_range.lo; d1 <= caps.d1_range.hi; ++d1) {
          if (d1 < 1 || d1 > spec.g - 1) continue;
          for (Integer d2 = caps.d2_range.lo; d2 <= caps.d2_range.hi; ++d2) {
            if (d2 < 1 || d2 > spec.g - 1) continue;
            const Integer v1 = d1 * (gl - 1) / (spec.g - 1);
            const Integer v2 = d2 * (gm - 1) / (spec.g - 1);
            const Integer rhs = spec.mode == Mode::Sum ? Integer(v1 + v2) : Integer(v1 - v2);
            if (rhs == lhs) out.push_back({d1, d2, l, m, n});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SolutionTuple> solve_g2(const EquationSpec& spec) {
  // For g = 2 every digit is 1 and parity forces n = 0 (odd b has none):
  // n >= 1 makes the left side odd while 2^l + 2^m - 2 and 2^l - 2^m are even.
  std::vector<SolutionTuple> out;
  if (mpz_odd_p(spec.b.get_mpz_t())) return out;
  const Integer V = spec.b + spec.base_sign + spec.const_sign;
  Integer lim = spec.b + 4;
  Integer Lmax = Integer(mpz_sizeinbase(lim.get_mpz_t(), 2));
  if (mpz_popcount(lim.get_mpz_t()) == 1) Lmax -= 1;  // exact power of two

  if (spec.mode == Mode::Sum) {
    const Integer target = V + 2;  // 2^l + 2^m
    for (Integer l = 1; l <= Lmax; ++l) {
      const Integer pl = pow_int(2, l);
      for (Integer m = l; m <= Lmax; ++m) {
        if (pl + pow_int(2, m) == target) out.push_back({1, 1, l, m, 0});
      }
    }
  } else {
    if (V == 0) {
      // 2^l - 2^m = 0 for every l = m: infinite family, truncated here.
      for (Integer t = 1; t <= Lmax; ++t) out.push_back({1, 1, t, t, 0});
    } else {
      for (Integer l = 1; l <= Lmax; ++l) {
        const Integer pl = pow_int(2, l);
        for (Integer m = 1; m <= l; ++m) {
          if (pl - pow_int(2, m) == V) out.push_back({1, 1, l, m, 0});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twrep
