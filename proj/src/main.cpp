// tw-repdigits: certified search for repdigit representations of (b±1)·b^n ± 1.
// SPDX-License-Identifier: MIT
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twrep/report.hpp"

namespace {

using namespace twrep;

Mode parse_mode(const std::string& s) {
  if (s == "sum") return Mode::Sum;
  if (s == "diff") return Mode::Diff;
  throw CLI::ValidationError("--mode", "must be sum or diff");
}

std::vector<Mode> parse_modes(const std::string& s) {
  std::vector<Mode> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t c = s.find(',', pos);
    if (c == std::string::npos) c = s.size();
    out.push_back(parse_mode(s.substr(pos, c - pos)));
    pos = c + 1;
  }
  return out;
}

Integer parse_int(const std::string& s, const char* flag) {
  try {
    return Integer(s, 10);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(flag, "not an integer: " + s);
  }
}

std::pair<Integer, Integer> parse_range(const std::string& s, const char* flag) {
  size_t dots = s.find("..");
  if (dots == std::string::npos) {
    Integer v = parse_int(s, flag);
    return {v, v};
  }
  Integer lo = parse_int(s.substr(0, dots), flag);
  Integer hi = parse_int(s.substr(dots + 2), flag);
  if (lo > hi) throw CLI::ValidationError(flag, "empty range " + s);
  return {lo, hi};
}

void require_base(const Integer& v, const char* flag) {
  if (v < 2) throw CLI::ValidationError(flag, "must be >= 2");
}

int parse_sign(int v, const char* flag) {
  if (v != 1 && v != -1) throw CLI::ValidationError(flag, "must be +1 or -1");
  return v;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << content;
}

ReductionOptions reduction_options(const std::string& strategy, int retry_steps) {
  ReductionOptions o;
  if (strategy == "retry") {
    o.strategy = ConvergentStrategy::RetryNext;
    o.retry_steps = retry_steps;
  } else if (strategy != "first") {
    throw CLI::ValidationError("--strategy", "must be first or retry");
  }
  return o;
}

// ---- verify: independent-oracle and family property runs ----

struct VerifyCaps {
  long b_hi, g_hi;
  Integer n_cap, lm_cap, t_cap, g2_b_hi;
};

bool verify_oracle(const VerifyCaps& caps, std::string& detail) {
  for (long b = 2; b <= caps.b_hi; ++b) {
    for (long g = 3; g <= caps.g_hi; ++g) {
      for (Mode mode : {Mode::Sum, Mode::Diff}) {
        for (int bs : {+1, -1}) {
          for (int cs : {+1, -1}) {
            EquationSpec spec{b, g, bs, cs, mode};
            SearchBox box{{0, caps.n_cap}, {1, caps.lm_cap}, {1, caps.lm_cap},
                          {1, g - 1},      {1, g - 1},       nullptr};
            auto fast = enumerate_box(spec, box, {});
            auto slow = oracle_enumerate(spec, box);
            if (fast != slow) {
              std::ostringstream o;
              o << "mismatch at b=" << b << " g=" << g << " mode="
                << (mode == Mode::Sum ? "sum" : "diff") << " signs(" << bs << "," << cs
                << "): " << fast.size() << " vs " << slow.size() << " solutions";
              detail = o.str();
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool verify_families(const VerifyCaps& caps, std::string& detail) {
  for (long g : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16}) {
    for (int bs : {+1, -1}) {
      for (int cs : {+1, -1}) {
        for (Mode mode : {Mode::Sum, Mode::Diff}) {
          for (long b : {2L, g}) {
            if (b < 2) continue;
            EquationSpec spec{b, g, bs, cs, mode};
            for (const auto& f : detect_families(spec)) {
              for (Integer t = 1; t <= caps.t_cap; ++t) {
                if (!check_solution(spec, family_member(f, t))) {
                  std::ostringstream o;
                  o << "family " << f.label << " member t=" << t.get_str()
                    << " fails at b=" << b << " g=" << g;
                  detail = o.str();
                  return false;
                }
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool verify_g2(const VerifyCaps& caps, const PrecisionPolicy& pol, std::string& detail) {
  for (Integer b = 2; b <= caps.g2_b_hi; ++b) {
    for (int bs : {+1, -1}) {
      for (int cs : {+1, -1}) {
        for (Mode mode : {Mode::Sum, Mode::Diff}) {
          EquationSpec spec{b, 2, bs, cs, mode};
          SolverReport rep = solve(spec, pol);
          for (const auto& s : rep.solutions) {
            if (s.n != 0) {
              detail = "g=2 solution with n != 0 at b=" + b.get_str();
              return false;
            }
            if (!check_solution(spec, s)) {
              detail = "g=2 invalid solution at b=" + b.get_str();
              return false;
            }
          }
          const Integer Lmax = rep.final_box.l_range.hi;
          SearchBox box{{0, 6}, {1, Lmax}, {1, Lmax}, {1, 1}, {1, 1}, nullptr};
          auto slow = oracle_enumerate(spec, box);
          if (slow != rep.solutions) {
            detail = "g=2 oracle mismatch at b=" + b.get_str() + ": " +
                     std::to_string(rep.solutions.size()) + " vs " +
                     std::to_string(slow.size());
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool verify_roundtrip(const PrecisionPolicy& pol, std::string& detail) {
  EquationSpec spec{3, 10, +1, -1, Mode::Sum};
  SolveOptions opts;
  opts.keep_all_traces = true;
  std::string a = report_json(solve(spec, pol, opts));
  std::string b = report_json(parse_report_json(a));
  if (a != b) {
    detail = "JSON round-trip not byte-stable";
    return false;
  }
  return true;
}

int run_verify(bool quick) {
  const PrecisionPolicy pol = PrecisionPolicy::from_env();
  VerifyCaps caps = quick ? VerifyCaps{3, 4, 10, 5, 20, 50} : VerifyCaps{5, 8, 20, 6, 100, 200};
  int fails = 0;
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!ok && !detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++fails;
  };
  std::string d;
  bool ok;
  d.clear(); ok = verify_oracle(caps, d);
  report("oracle equivalence (enumerate_box == oracle_enumerate)", ok, d);
  d.clear(); ok = verify_families(caps, d);
  report("family members satisfy the equation", ok, d);
  d.clear(); ok = verify_g2(caps, pol, d);
  report("g=2: all solutions have n=0 and match the oracle", ok, d);
  d.clear(); ok = verify_roundtrip(pol, d);
  report("JSON report round-trip", ok, d);
  std::cout << (fails == 0 ? "verify: all checks passed\n"
                           : "verify: " + std::to_string(fails) + " check(s) FAILED\n");
  return fails == 0 ? 0 : 1;
}

std::string bounds_text(const Integer& b, const Integer& g, Mode mode, const BoundReport& r) {
  std::ostringstream o;
  o << "b=" << b.get_str() << " g=" << g.get_str() << " mode="
    << (mode == Mode::Sum ? "sum" : "diff") << "\n";
  o << "C1 (step-1 linear form constant): " << r.C1.to_string() << "\n";
  o << "C2 (step-2 linear form constant): " << r.C2.to_string() << "\n";
  o << "theorem gap cap:    " << r.gap_bound.get_str() << "\n";
  o << "H (fixed-point seed): " << r.H.to_string() << "\n";
  o << "L bound:            " << r.L_bound.to_string() << "\n";
  o << "n_max:              " << r.n_max.get_str() << "\n";
  o << "lm_max:             " << r.lm_max.get_str() << "\n";
  o << "theorem n cap via lm relation: " << r.step2_n_bound.get_str() << "\n";
  return o.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tw-repdigits: certified search for representations of (b±1)·b^n ± 1 as "
               "sums/differences of two base-g repdigits"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  std::string b_str = "2", g_str = "10", mode_str = "sum", modes_str = "sum,diff";
  std::string b_range = "2..12";
  std::string strategy = "first";
  int retry_steps = 2;
  int base_sign = 1, const_sign = 1, step = 2;
  bool quick = false;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", out_path, "output file (default: stdout)");
    c->add_option("--format", format, "json | csv | text (csv: suite only)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* c_solve = app.add_subcommand("solve", "solve one equation cell");
  c_solve->add_option("--b", b_str, "base b (>= 2)")->required();
  c_solve->add_option("--g", g_str, "repdigit base g (>= 2), default 10");
  c_solve->add_option("--mode", mode_str, "sum | diff");
  c_solve->add_option("--base-sign", base_sign, "+1: b+1, -1: b-1 (default +1)");
  c_solve->add_option("--const-sign", const_sign, "+1 or -1 (default +1)");
  c_solve->add_option("--strategy", strategy, "first | retry (convergent strategy)");
  c_solve->add_option("--retry-steps", retry_steps, "extra convergents for retry");
  add_common(c_solve);

  CLI::App* c_suite = app.add_subcommand("suite", "solve a grid of cells, all four sign pairs");
  c_suite->add_option("--b", b_range, "base range lo..hi (default 2..12)");
  c_suite->add_option("--g", g_str, "repdigit base g, default 10");
  c_suite->add_option("--mode", modes_str, "comma list: sum,diff");
  c_suite->add_option("--strategy", strategy, "first | retry");
  c_suite->add_option("--retry-steps", retry_steps, "extra convergents for retry");
  add_common(c_suite);

  CLI::App* c_reduce = app.add_subcommand("reduce", "run the reduction steps for one cell");
  c_reduce->add_option("--b", b_str, "base b (>= 2)")->required();
  c_reduce->add_option("--g", g_str, "repdigit base g, default 10");
  c_reduce->add_option("--mode", mode_str, "sum | diff");
  c_reduce->add_option("--base-sign", base_sign, "+1 or -1");
  c_reduce->add_option("--step", step, "1: gap bound only; 2: both steps (default)");
  c_reduce->add_option("--strategy", strategy, "first | retry");
  c_reduce->add_option("--retry-steps", retry_steps, "extra convergents for retry");
  add_common(c_reduce);

  CLI::App* c_bounds = app.add_subcommand("bounds", "theorem-chain constants and caps");
  c_bounds->add_option("--b", b_str, "base b (>= 2)")->required();
  c_bounds->add_option("--g", g_str, "repdigit base g, default 10");
  c_bounds->add_option("--mode", mode_str, "sum | diff");
  add_common(c_bounds);

  CLI::App* c_fam = app.add_subcommand("families", "infinite families for one cell");
  c_fam->add_option("--b", b_str, "base b (>= 2)")->required();
  c_fam->add_option("--g", g_str, "repdigit base g, default 10");
  c_fam->add_option("--mode", mode_str, "sum | diff");
  c_fam->add_option("--base-sign", base_sign, "+1 or -1");
  c_fam->add_option("--const-sign", const_sign, "+1 or -1");
  add_common(c_fam);

  CLI::App* c_verify = app.add_subcommand("verify", "oracle and property self-checks");
  c_verify->add_flag("--quick", quick, "reduced caps, < 60 s");

  CLI11_PARSE(app, argc, argv);

  try {
    const PrecisionPolicy pol = PrecisionPolicy::from_env();

    if (app.got_subcommand(c_verify)) return run_verify(quick);

    const Integer g = parse_int(g_str, "--g");
    require_base(g, "--g");

    if (app.got_subcommand(c_solve)) {
      const Integer b = parse_int(b_str, "--b");
      require_base(b, "--b");
      EquationSpec spec{b, g, parse_sign(base_sign, "--base-sign"),
                        parse_sign(const_sign, "--const-sign"), parse_mode(mode_str)};
      SolveOptions opts;
      opts.reduction = reduction_options(strategy, retry_steps);
      SolverReport rep = solve(spec, pol, opts);
      if (format == "csv") throw CLI::ValidationError("--format", "csv applies to suite only");
      write_out(out_path, format == "json" ? report_json(rep) : report_text(rep));
      return 0;
    }
    if (app.got_subcommand(c_suite)) {
      auto [lo, hi] = parse_range(b_range, "--b");
      require_base(lo, "--b");
      SolveOptions opts;
      opts.reduction = reduction_options(strategy, retry_steps);
      opts.keep_all_traces = false;
      auto cells = run_suite(lo, hi, g, parse_modes(modes_str), pol, opts);
      std::string body = format == "json"  ? suite_json(cells)
                         : format == "csv" ? suite_csv(cells)
                                           : suite_text(cells);
      write_out(out_path, body);
      return 0;
    }
    if (app.got_subcommand(c_reduce)) {
      const Integer b = parse_int(b_str, "--b");
      require_base(b, "--b");
      if (step != 1 && step != 2) throw CLI::ValidationError("--step", "must be 1 or 2");
      EquationSpec spec{b, g, parse_sign(base_sign, "--base-sign"), +1, parse_mode(mode_str)};
      ReductionOptions opts = reduction_options(strategy, retry_steps);
      StepResult s1 = step1_gap(spec, pol, opts);
      if (step == 1) {
        write_out(out_path, step_json(spec, s1, nullptr));
      } else {
        StepResult s2 = step2_n(spec, s1.bound, pol, opts);
        write_out(out_path, step_json(spec, s1, &s2));
      }
      return 0;
    }
    if (app.got_subcommand(c_bounds)) {
      const Integer b = parse_int(b_str, "--b");
      require_base(b, "--b");
      Mode mode = parse_mode(mode_str);
      BoundReport r = bound_report(b, g, mode);
      write_out(out_path, format == "json" ? bounds_json(b, g, mode, r)
                                           : bounds_text(b, g, mode, r));
      return 0;
    }
    if (app.got_subcommand(c_fam)) {
      const Integer b = parse_int(b_str, "--b");
      require_base(b, "--b");
      EquationSpec spec{b, g, parse_sign(base_sign, "--base-sign"),
                        parse_sign(const_sign, "--const-sign"), parse_mode(mode_str)};
      std::vector<FamilyDescriptor> fams = detect_families(spec);
      if (spec.g >= 3 && multiplicative_dependence(spec.b, spec.g)) {
        auto same3 = [](const FamilyDescriptor& x, const FamilyDescriptor& y) {
          if (!x.generator || !y.generator) return false;
          for (int t = 1; t <= 3; ++t)
            if (!(family_member(x, t) == family_member(y, t))) return false;
          return true;
        };
        for (auto& f : direct_scan(spec, pol).power_families) {
          bool dup = false;
          for (const auto& e : fams) dup = dup || same3(e, f);
          if (!dup) fams.push_back(std::move(f));
        }
      }
      write_out(out_path, families_json(spec, fams));
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
