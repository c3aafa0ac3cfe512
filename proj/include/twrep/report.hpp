// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "twrep/solver.hpp"

namespace twrep {

// All emitters are byte-stable: keys sorted, integers as decimal strings (no
// 64-bit truncation), LF line endings, locale-independent.

// One solve run. Top-level "schema_version": 1.
std::string report_json(const SolverReport& r);
// A suite of cells plus per-mode totals (table columns exclude b = g; the
// inclusive totals do not).
std::string suite_json(const std::vector<CellReport>& cells);
// One step's reduction cases (CLI `reduce`).
std::string step_json(const EquationSpec& spec, const StepResult& s1, const StepResult* s2);
// Theorem-chain constants and caps (CLI `bounds`).
std::string bounds_json(const Integer& b, const Integer& g, Mode mode, const BoundReport& r);
// Family descriptors with their first members (CLI `families`).
std::string families_json(const EquationSpec& spec, const std::vector<FamilyDescriptor>& fams);

// Survey-table CSV: one table per mode, comma separator, LF, no quoting.
// Sum rows: m-l<= / n-2<= / n_b / ml_b / N= / l<= / m<= / n<=;
// diff rows: l-m-2<= / n-1<= / N0= / N= / l<= / m<= / n<=.
std::string suite_csv(const std::vector<CellReport>& cells);

// Human-readable renderings.
std::string report_text(const SolverReport& r);
std::string suite_text(const std::vector<CellReport>& cells);

// Inverse of report_json for everything serializable; the theorem block and
// per-n length caps are recomputed from the parsed spec (they are pure
// functions of it), family generators are not reconstructed. Guarantees
// report_json(parse_report_json(s)) == s for any s produced by report_json.
SolverReport parse_report_json(const std::string& s);

}  // namespace twrep
