// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twrep/bounds.hpp"
#include "twrep/enumerate.hpp"
#include "twrep/reduction.hpp"

namespace twrep {

// b = a^e_b, g = a^e_g with a minimal; exists iff log b / log g is rational.
struct MultDep {
  Integer a, e_b, e_g;
};
std::optional<MultDep> multiplicative_dependence(const Integer& b, const Integer& g);

enum class StepKind { GapReduction, NReduction };
enum class Resolution { BoundAccepted, CandidateContradiction, CandidatePinned };

// One reduction (or direct-scan) case and how it was resolved. Step-1 cases
// vary a single digit, stored in d2 for either mode; step-2 cases carry both
// digits and the gap.
struct CaseTrace {
  StepKind step = StepKind::GapReduction;
  int base_sign = 1;
  std::optional<Integer> d1;
  Integer d2;
  std::optional<Integer> gap;
  std::string problem;  // parameter summary (tau, mu, A, B, M)
  std::string outcome;  // eps_positive | no_candidate | candidate | screened | lattice
  Resolution resolution = Resolution::BoundAccepted;
  Integer w_bound;  // this case's contribution to the step bound
  std::optional<Integer> m0;
  std::optional<Integer> companion;
  int epsilon_sign = 0;  // +1 part a, -1 part b, 0 not applicable
  int attempts = 0;      // convergents examined
};

struct StepResult {
  Integer bound;  // max over cases, in w units (sum: m-l / n-2; diff: l-m-2 / n-1)
  std::vector<CaseTrace> traces;
};

// Step 1: bound the length gap. Requires tau = log b/log g irrational and
// g >= 3; throws std::domain_error otherwise.
StepResult step1_gap(const EquationSpec& spec, const PrecisionPolicy& pol,
                     const ReductionOptions& opts = {});

// Step 2: bound the exponent n given the step-1 gap bound.
StepResult step2_n(const EquationSpec& spec, const Integer& gap_max, const PrecisionPolicy& pol,
                   const ReductionOptions& opts = {});

// Multiplicatively dependent cells: both bounds from a finite scan of the
// integer lattice j·log a, plus the power families living on it.
struct DirectScanResult {
  Integer gap_max;  // step-1 w units
  Integer n_w_max;  // step-2 w units
  std::vector<FamilyDescriptor> power_families;
  std::vector<std::string> flags;
  std::vector<CaseTrace> traces;
};
DirectScanResult direct_scan(const EquationSpec& spec, const PrecisionPolicy& pol);

struct SolverCounts {
  Integer n_eq_0 = 0, n_ge_1 = 0, max_l = 0, max_m = 0, max_n = 0;
};

struct SolverReport {
  EquationSpec spec;
  BoundReport theorem;
  Integer step1_gap_max = -1;  // -1 when the step does not apply (g = 2)
  Integer step2_n_max = -1;
  bool used_direct_scan = false;
  SearchBox final_box;
  std::vector<SolutionTuple> solutions;
  std::vector<FamilyDescriptor> families;
  std::vector<CaseTrace> traces;
  SolverCounts counts;
  std::vector<std::string> flags;
};

struct SolveOptions {
  ReductionOptions reduction;
  bool keep_all_traces = true;  // false: keep only candidate-outcome traces
};

SolverReport solve(const EquationSpec& spec, const PrecisionPolicy& pol,
                   const SolveOptions& opts = {});

struct SignedSolution {
  int base_sign = 1, const_sign = 1;
  SolutionTuple t;
};

// One (b, mode) grid cell: the four sign-pair reports and their aggregates.
struct CellReport {
  Integer b, g;
  Mode mode = Mode::Sum;
  std::vector<SolverReport> parts;  // sign order (+,+), (+,-), (-,+), (-,-)
  std::vector<std::string> errors;  // parallel to parts; empty string = ok
  Integer gap_row = -1;             // max step-1 bound over parts
  Integer nw_row = -1;              // max step-2 bound over parts
  Integer n_cap = -1;               // nw_row + 2 (sum) / + 1 (diff)
  Integer ml_b = -1;                // sum only: display length cap at n_cap
  SolverCounts counts;              // totals / maxima over the cell
  std::vector<SignedSolution> solutions;
  std::vector<std::string> flags;
};

std::vector<CellReport> run_suite(const Integer& b_lo, const Integer& b_hi, const Integer& g,
                                  const std::vector<Mode>& modes, const PrecisionPolicy& pol,
                                  const SolveOptions& opts = {});

}  // namespace twrep
