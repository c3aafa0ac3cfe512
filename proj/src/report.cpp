// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#include "twrep/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace twrep {

namespace {

using nlohmann::json;

std::string istr(const Integer& v) { return v.get_str(); }

Integer iparse(const std::string& s) { return Integer(s, 10); }

// Locale-independent double rendering (interval endpoints are display data;
// the certified values live in the integer caps).
std::string dstr(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string mode_str(Mode m) { return m == Mode::Sum ? "sum" : "diff"; }

Mode mode_parse(const std::string& s) {
  if (s == "sum") return Mode::Sum;
  if (s == "diff") return Mode::Diff;
  throw std::runtime_error("report: unknown mode " + s);
}

json interval_json(const RealInterval& x) {
  return json{{"lo", dstr(x.lo_double())}, {"hi", dstr(x.hi_double())}};
}

json spec_json(const EquationSpec& s) {
  return json{{"b", istr(s.b)},
              {"g", istr(s.g)},
              {"base_sign", s.base_sign},
              {"const_sign", s.const_sign},
              {"mode", mode_str(s.mode)}};
}

EquationSpec spec_parse(const json& j) {
  EquationSpec s;
  s.b = iparse(j.at("b").get<std::string>());
  s.g = iparse(j.at("g").get<std::string>());
  s.base_sign = j.at("base_sign").get<int>();
  s.const_sign = j.at("const_sign").get<int>();
  s.mode = mode_parse(j.at("mode").get<std::string>());
  return s;
}

json bounds_block(const BoundReport& r) {
  return json{{"C1", interval_json(r.C1)},
              {"C2", interval_json(r.C2)},
              {"H", interval_json(r.H)},
              {"L_bound", interval_json(r.L_bound)},
              {"gap_bound", istr(r.gap_bound)},
              {"step2_n_bound", istr(r.step2_n_bound)},
              {"n_max", istr(r.n_max)},
              {"lm_max", istr(r.lm_max)}};
}

const char* resolution_str(Resolution r) {
  switch (r) {
    case Resolution::BoundAccepted: return "bound_accepted";
    case Resolution::CandidateContradiction: return "candidate_contradiction";
    default: return "candidate_pinned";
  }
}

Resolution resolution_parse(const std::string& s) {
  if (s == "bound_accepted") return Resolution::BoundAccepted;
  if (s == "candidate_contradiction") return Resolution::CandidateContradiction;
  if (s == "candidate_pinned") return Resolution::CandidatePinned;
  throw std::runtime_error("report: unknown resolution " + s);
}

json trace_json(const CaseTrace& t) {
  json j{{"base_sign", t.base_sign},
         {"d2", istr(t.d2)},
         {"problem", t.problem},
         {"outcome", t.outcome},
         {"resolution", resolution_str(t.resolution)},
         {"w", istr(t.w_bound)},
         {"epsilon_sign", t.epsilon_sign},
         {"attempts", t.attempts}};
  if (t.d1) j["d1"] = istr(*t.d1);
  if (t.gap) j["gap"] = istr(*t.gap);
  if (t.m0) j["m0"] = istr(*t.m0);
  if (t.companion) j["companion"] = istr(*t.companion);
  return j;
}

CaseTrace trace_parse(const json& j, StepKind step) {
  CaseTrace t;
  t.step = step;
  t.base_sign = j.at("base_sign").get<int>();
  t.d2 = iparse(j.at("d2").get<std::string>());
  t.problem = j.at("problem").get<std::string>();
  t.outcome = j.at("outcome").get<std::string>();
  t.resolution = resolution_parse(j.at("resolution").get<std::string>());
  t.w_bound = iparse(j.at("w").get<std::string>());
  t.epsilon_sign = j.at("epsilon_sign").get<int>();
  t.attempts = j.at("attempts").get<int>();
  if (j.contains("d1")) t.d1 = iparse(j.at("d1").get<std::string>());
  if (j.contains("gap")) t.gap = iparse(j.at("gap").get<std::string>());
  if (j.contains("m0")) t.m0 = iparse(j.at("m0").get<std::string>());
  if (j.contains("companion")) t.companion = iparse(j.at("companion").get<std::string>());
  return t;
}

json range_json(const IntRange& r) { return json::array({istr(r.lo), istr(r.hi)}); }

IntRange range_parse(const json& j) {
  return IntRange{iparse(j.at(0).get<std::string>()), iparse(j.at(1).get<std::string>())};
}

json box_json(const SearchBox& b) {
  return json{{"n", range_json(b.n_range)},   {"l", range_json(b.l_range)},
              {"m", range_json(b.m_range)},   {"d1", range_json(b.d1_range)},
              {"d2", range_json(b.d2_range)}, {"per_n_caps", static_cast<bool>(b.lm_cap)}};
}

json tuple_json(const SolutionTuple& t) {
  return json::array({istr(t.d1), istr(t.d2), istr(t.l), istr(t.m), istr(t.n)});
}

SolutionTuple tuple_parse(const json& j) {
  return SolutionTuple{iparse(j.at(0).get<std::string>()), iparse(j.at(1).get<std::string>()),
                       iparse(j.at(2).get<std::string>()), iparse(j.at(3).get<std::string>()),
                       iparse(j.at(4).get<std::string>())};
}

const char* kind_str(FamilyDescriptor::Kind k) {
  switch (k) {
    case FamilyDescriptor::Kind::A: return "A";
    case FamilyDescriptor::Kind::B: return "B";
    case FamilyDescriptor::Kind::C: return "C";
    default: return "P";
  }
}

json family_json(const FamilyDescriptor& f) {
  return json{
      {"kind", kind_str(f.kind)}, {"k", istr(f.k)}, {"d1", istr(f.d1)}, {"label", f.label}};
}

FamilyDescriptor family_parse(const json& j, const EquationSpec& spec) {
  FamilyDescriptor f;
  const std::string k = j.at("kind").get<std::string>();
  f.k = iparse(j.at("k").get<std::string>());
  f.d1 = iparse(j.at("d1").get<std::string>());
  f.label = j.at("label").get<std::string>();
  const Integer g = spec.g, kk = f.k, d1 = f.d1;
  if (k == "A") {
    f.kind = FamilyDescriptor::Kind::A;
    f.generator = [g, kk](const Integer& t) { return SolutionTuple{2, g - 1, 1, t, kk * t}; };
  } else if (k == "B") {
    f.kind = FamilyDescriptor::Kind::B;
    f.generator = [g, kk, d1](const Integer& t) {
      return SolutionTuple{d1, g - 1 - d1, t, t, kk * t};
    };
  } else if (k == "C") {
    f.kind = FamilyDescriptor::Kind::C;
    f.generator = [g](const Integer& t) { return SolutionTuple{1, g - 2, t, t + 1, t}; };
  } else if (k == "P") {
    f.kind = FamilyDescriptor::Kind::P;  // generator not serialized
  } else {
    throw std::runtime_error("report: unknown family kind " + k);
  }
  return f;
}

json counts_json(const SolverCounts& c) {
  return json{{"n_eq_0", istr(c.n_eq_0)},
              {"n_ge_1", istr(c.n_ge_1)},
              {"max_l", istr(c.max_l)},
              {"max_m", istr(c.max_m)},
              {"max_n", istr(c.max_n)}};
}

SolverCounts counts_parse(const json& j) {
  SolverCounts c;
  c.n_eq_0 = iparse(j.at("n_eq_0").get<std::string>());
  c.n_ge_1 = iparse(j.at("n_ge_1").get<std::string>());
  c.max_l = iparse(j.at("max_l").get<std::string>());
  c.max_m = iparse(j.at("max_m").get<std::string>());
  c.max_n = iparse(j.at("max_n").get<std::string>());
  return c;
}

json step_block(const std::vector<CaseTrace>& traces, StepKind which, const Integer& bound,
                const char* bound_key) {
  json per = json::array();
  for (const auto& t : traces)
    if (t.step == which) per.push_back(trace_json(t));
  json j;
  j["per_case"] = std::move(per);
  j[bound_key] = istr(bound);
  return j;
}

json report_json_obj(const SolverReport& r) {
  json j;
  j["schema_version"] = 1;
  j["spec"] = spec_json(r.spec);
  j["bounds"] = bounds_block(r.theorem);
  j["step1"] = step_block(r.traces, StepKind::GapReduction, r.step1_gap_max, "gap_max");
  j["step2"] = step_block(r.traces, StepKind::NReduction, r.step2_n_max, "n_max");
  j["box"] = box_json(r.final_box);
  json sols = json::array();
  for (const auto& s : r.solutions) sols.push_back(tuple_json(s));
  j["solutions"] = std::move(sols);
  json fams = json::array();
  for (const auto& f : r.families) fams.push_back(family_json(f));
  j["families"] = std::move(fams);
  j["counts"] = counts_json(r.counts);
  j["flags"] = r.flags;
  j["used_direct_scan"] = r.used_direct_scan;
  return j;
}

}  // namespace

std::string report_json(const SolverReport& r) { return report_json_obj(r).dump(1) + "\n"; }

SolverReport parse_report_json(const std::string& s) {
  json j = json::parse(s);
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != 1)
    throw std::runtime_error("report: unsupported schema_version");
  SolverReport r;
  r.spec = spec_parse(j.at("spec"));
  r.theorem = bound_report(r.spec.b, r.spec.g, r.spec.mode);
  r.step1_gap_max = iparse(j.at("step1").at("gap_max").get<std::string>());
  r.step2_n_max = iparse(j.at("step2").at("n_max").get<std::string>());
  for (const auto& t : j.at("step1").at("per_case"))
    r.traces.push_back(trace_parse(t, StepKind::GapReduction));
  for (const auto& t : j.at("step2").at("per_case"))
    r.traces.push_back(trace_parse(t, StepKind::NReduction));
  const json& bx = j.at("box");
  r.final_box.n_range = range_parse(bx.at("n"));
  r.final_box.l_range = range_parse(bx.at("l"));
  r.final_box.m_range = range_parse(bx.at("m"));
  r.final_box.d1_range = range_parse(bx.at("d1"));
  r.final_box.d2_range = range_parse(bx.at("d2"));
  if (bx.at("per_n_caps").get<bool>()) {
    const Integer b = r.spec.b, g = r.spec.g, flat = r.final_box.l_range.hi;
    const Mode mode = r.spec.mode;
    r.final_box.lm_cap = [b, g, flat, mode](const Integer& n) {
      Integer v = relation_m_from_n(b, g, n, mode);
      return v < flat ? v : flat;
    };
  }
  for (const auto& t : j.at("solutions")) r.solutions.push_back(tuple_parse(t));
  for (const auto& f : j.at("families")) r.families.push_back(family_parse(f, r.spec));
  r.counts = counts_parse(j.at("counts"));
  for (const auto& f : j.at("flags")) r.flags.push_back(f.get<std::string>());
  r.used_direct_scan = j.at("used_direct_scan").get<bool>();
  return r;
}

std::string step_json(const EquationSpec& spec, const StepResult& s1, const StepResult* s2) {
  json j;
  j["schema_version"] = 1;
  j["spec"] = spec_json(spec);
  j["step1"] = step_block(s1.traces, StepKind::GapReduction, s1.bound, "gap_max");
  if (s2) j["step2"] = step_block(s2->traces, StepKind::NReduction, s2->bound, "n_max");
  return j.dump(1) + "\n";
}

std::string bounds_json(const Integer& b, const Integer& g, Mode mode, const BoundReport& r) {
  json j;
  j["schema_version"] = 1;
  j["b"] = istr(b);
  j["g"] = istr(g);
  j["mode"] = mode_str(mode);
  j["bounds"] = bounds_block(r);
  return j.dump(1) + "\n";
}

std::string families_json(const EquationSpec& spec, const std::vector<FamilyDescriptor>& fams) {
  json j;
  j["schema_version"] = 1;
  j["spec"] = spec_json(spec);
  json arr = json::array();
  for (const auto& f : fams) {
    json fj = family_json(f);
    if (f.generator) {
      json mem = json::array();
      for (int t = 1; t <= 3; ++t) mem.push_back(tuple_json(family_member(f, t)));
      fj["members"] = std::move(mem);
    }
    arr.push_back(std::move(fj));
  }
  j["families"] = std::move(arr);
  return j.dump(1) + "\n";
}

namespace {

struct SuiteTotals {
  Mode mode;
  Integer table_n_ge_1 = 0, all_n_ge_1 = 0, table_n_eq_0 = 0, all_n_eq_0 = 0;
};

std::vector<SuiteTotals> suite_totals(const std::vector<CellReport>& cells) {
  std::vector<SuiteTotals> out;
  for (const auto& c : cells) {
    SuiteTotals* t = nullptr;
    for (auto& e : out)
      if (e.mode == c.mode) t = &e;
    if (!t) {
      out.push_back(SuiteTotals{c.mode, 0, 0, 0, 0});
      t = &out.back();
    }
    t->all_n_ge_1 += c.counts.n_ge_1;
    t->all_n_eq_0 += c.counts.n_eq_0;
    if (c.b != c.g) {
      t->table_n_ge_1 += c.counts.n_ge_1;
      t->table_n_eq_0 += c.counts.n_eq_0;
    }
  }
  return out;
}

json cell_json(const CellReport& c) {
  json j;
  j["b"] = istr(c.b);
  j["g"] = istr(c.g);
  j["mode"] = mode_str(c.mode);
  j["gap_row"] = istr(c.gap_row);
  j["nw_row"] = istr(c.nw_row);
  j["n_cap"] = istr(c.n_cap);
  j["ml_b"] = istr(c.ml_b);
  j["counts"] = counts_json(c.counts);
  j["errors"] = c.errors;
  j["flags"] = c.flags;
  json sols = json::array();
  for (const auto& s : c.solutions) {
    sols.push_back(json{{"base_sign", s.base_sign},
                        {"const_sign", s.const_sign},
                        {"t", tuple_json(s.t)}});
  }
  j["solutions"] = std::move(sols);
  json parts = json::array();
  for (const auto& p : c.parts) {
    int cases = 0, candidates = 0, pinned = 0;
    for (const auto& t : p.traces) {
      ++cases;
      if (t.outcome == "candidate") ++candidates;
      if (t.resolution == Resolution::CandidatePinned) ++pinned;
    }
    parts.push_back(json{{"base_sign", p.spec.base_sign},
                         {"const_sign", p.spec.const_sign},
                         {"gap_max", istr(p.step1_gap_max)},
                         {"n_w_max", istr(p.step2_n_max)},
                         {"used_direct_scan", p.used_direct_scan},
                         {"n_solutions", p.solutions.size()},
                         {"trace_summary", json{{"cases", cases},
                                                {"candidates", candidates},
                                                {"pinned", pinned}}}});
  }
  j["parts"] = std::move(parts);
  return j;
}

}  // namespace

std::string suite_json(const std::vector<CellReport>& cells) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = "suite";
  json arr = json::array();
  for (const auto& c : cells) arr.push_back(cell_json(c));
  j["cells"] = std::move(arr);
  json tot = json::array();
  for (const auto& t : suite_totals(cells)) {
    tot.push_back(json{{"mode", mode_str(t.mode)},
                       {"table_n_ge_1", istr(t.table_n_ge_1)},
                       {"all_n_ge_1", istr(t.all_n_ge_1)},
                       {"table_n_eq_0", istr(t.table_n_eq_0)},
                       {"all_n_eq_0", istr(t.all_n_eq_0)}});
  }
  j["totals"] = std::move(tot);
  return j.dump(1) + "\n";
}

namespace {

std::vector<const CellReport*> table_cells(const std::vector<CellReport>& cells, Mode mode) {
  std::vector<const CellReport*> out;
  for (const auto& c : cells)
    if (c.mode == mode && c.b != c.g) out.push_back(&c);
  return out;
}

void csv_row(std::ostringstream& o, const std::string& label,
             const std::vector<const CellReport*>& cs,
             const std::function<Integer(const CellReport&)>& pick) {
  o << label;
  for (const auto* c : cs) o << "," << pick(*c).get_str();
  o << "\n";
}

void csv_table(std::ostringstream& o, const std::vector<CellReport>& cells, Mode mode) {
  auto cs = table_cells(cells, mode);
  if (cs.empty()) return;
  o << "mode," << mode_str(mode) << "\n";
  o << "b";
  for (const auto* c : cs) o << "," << c->b.get_str();
  o << "\n";
  if (mode == Mode::Sum) {
    csv_row(o, "m-l<=", cs, [](const CellReport& c) { return c.gap_row; });
    csv_row(o, "n-2<=", cs, [](const CellReport& c) { return c.nw_row; });
    csv_row(o, "n_b", cs, [](const CellReport& c) { return c.n_cap; });
    csv_row(o, "ml_b", cs, [](const CellReport& c) { return c.ml_b; });
  } else {
    csv_row(o, "l-m-2<=", cs, [](const CellReport& c) { return c.gap_row; });
    csv_row(o, "n-1<=", cs, [](const CellReport& c) { return c.nw_row; });
    csv_row(o, "N0=", cs, [](const CellReport& c) { return c.counts.n_eq_0; });
  }
  csv_row(o, "N=", cs, [](const CellReport& c) { return c.counts.n_ge_1; });
  csv_row(o, "l<=", cs, [](const CellReport& c) { return c.counts.max_l; });
  csv_row(o, "m<=", cs, [](const CellReport& c) { return c.counts.max_m; });
  csv_row(o, "n<=", cs, [](const CellReport& c) { return c.counts.max_n; });
}

}  // namespace

std::string suite_csv(const std::vector<CellReport>& cells) {
  std::ostringstream o;
  bool first = true;
  for (Mode mode : {Mode::Sum, Mode::Diff}) {
    if (table_cells(cells, mode).empty()) continue;
    if (!first) o << "\n";
    csv_table(o, cells, mode);
    first = false;
  }
  return o.str();
}

namespace {

std::string sign_pair(int bs, int cs) {
  return std::string("(") + (bs > 0 ? "+" : "-") + "," + (cs > 0 ? "+" : "-") + ")";
}

void text_tuple(std::ostringstream& o, const SolutionTuple& t) {
  o << "(" << t.d1.get_str() << "," << t.d2.get_str() << "," << t.l.get_str() << ","
    << t.m.get_str() << "," << t.n.get_str() << ")";
}

}  // namespace

std::string report_text(const SolverReport& r) {
  std::ostringstream o;
  const auto& s = r.spec;
  o << "equation: (b" << (s.base_sign > 0 ? "+" : "-") << "1)*b^n " << (s.const_sign > 0 ? "+" : "-")
    << " 1 = d1*R(l) " << (s.mode == Mode::Sum ? "+" : "-") << " d2*R(m),  b=" << s.b.get_str()
    << " g=" << s.g.get_str() << "\n";
  o << "theorem caps: n <= " << r.theorem.n_max.get_str() << ", l,m <= "
    << r.theorem.lm_max.get_str() << "\n";
  o << (r.used_direct_scan ? "direct lattice scan" : "reduction") << ": step1 w <= "
    << r.step1_gap_max.get_str() << ", step2 w <= " << r.step2_n_max.get_str() << "\n";
  o << "box: n in [" << r.final_box.n_range.lo.get_str() << "," << r.final_box.n_range.hi.get_str()
    << "], l,m in [" << r.final_box.l_range.lo.get_str() << ","
    << r.final_box.l_range.hi.get_str() << "]"
    << (r.final_box.lm_cap ? " with per-n caps" : "") << "\n";
  o << "counts: n=0: " << r.counts.n_eq_0.get_str() << ", n>=1: " << r.counts.n_ge_1.get_str()
    << ", max l=" << r.counts.max_l.get_str() << " m=" << r.counts.max_m.get_str()
    << " n=" << r.counts.max_n.get_str() << "\n";
  for (const auto& f : r.families) o << "family: " << f.label << "\n";
  o << "solutions (d1,d2,l,m,n):\n";
  for (const auto& t : r.solutions) {
    o << "  ";
    text_tuple(o, t);
    o << "\n";
  }
  for (const auto& fl : r.flags) o << "note: " << fl << "\n";
  return o.str();
}

std::string suite_text(const std::vector<CellReport>& cells) {
  std::ostringstream o;
  for (Mode mode : {Mode::Sum, Mode::Diff}) {
    auto cs = table_cells(cells, mode);
    if (cs.empty()) continue;
    o << "== " << mode_str(mode) << " ==\n";
    auto row = [&](const std::string& label, const std::function<Integer(const CellReport&)>& p) {
      o << std::setw(8) << label;
      for (const auto* c : cs) o << std::setw(6) << p(*c).get_str();
      o << "\n";
    };
    row("b", [](const CellReport& c) { return c.b; });
    if (mode == Mode::Sum) {
      row("m-l<=", [](const CellReport& c) { return c.gap_row; });
      row("n-2<=", [](const CellReport& c) { return c.nw_row; });
      row("n_b", [](const CellReport& c) { return c.n_cap; });
      row("ml_b", [](const CellReport& c) { return c.ml_b; });
    } else {
      row("l-m-2<=", [](const CellReport& c) { return c.gap_row; });
      row("n-1<=", [](const CellReport& c) { return c.nw_row; });
      row("N0=", [](const CellReport& c) { return c.counts.n_eq_0; });
    }
    row("N=", [](const CellReport& c) { return c.counts.n_ge_1; });
    row("l<=", [](const CellReport& c) { return c.counts.max_l; });
    row("m<=", [](const CellReport& c) { return c.counts.max_m; });
    row("n<=", [](const CellReport& c) { return c.counts.max_n; });
  }
  for (const auto& t : suite_totals(cells)) {
    o << mode_str(t.mode) << " totals: n>=1: " << t.table_n_ge_1.get_str()
      << " across table columns, " << t.all_n_ge_1.get_str() << " including b=g; n=0: "
      << t.table_n_eq_0.get_str() << " / " << t.all_n_eq_0.get_str() << "\n";
  }
  for (const auto& c : cells) {
    for (size_t i = 0; i < c.errors.size() && i < c.parts.size(); ++i)
      if (!c.errors[i].empty())
        o << "error " << mode_str(c.mode) << " b=" << c.b.get_str() << " "
          << sign_pair(c.parts[i].spec.base_sign, c.parts[i].spec.const_sign) << ": "
          << c.errors[i] << "\n";
    for (const auto& fl : c.flags)
      o << "note " << mode_str(c.mode) << " b=" << c.b.get_str() << ": " << fl << "\n";
  }
  return o.str();
}

}  // namespace twrep
