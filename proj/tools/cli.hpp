// Copyright 2026 The twodom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "twodom/twodom.hpp"

namespace twodom::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2 };

/// Input or usage problem; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

struct GraphSource {
  std::string file;
  std::string named;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph", file, "edge-list file");
    auto* n = cmd->add_option("--named", named, "named graph: K<n>, C<n>, P<n>, K4xK2");
    g->excludes(n);
  }

  Graph load() const {
    if (!named.empty()) {
      try {
        return gen_named(named);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (file.empty()) throw UsageError("one of --graph or --named is required");
    return parse_edge_list(read_file(file));
  }
};

struct CoeffSource {
  std::string file;
  std::optional<int> builtin;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--coeffs", file, "coefficient JSON file");
    auto* b = cmd->add_option("--builtin", builtin, "built-in integer coefficient set for D in 6..9");
    f->excludes(b);
  }

  bool given() const { return !file.empty() || builtin.has_value(); }

  CoefficientSet load() const {
    if (builtin) {
      try {
        return builtin_table2(*builtin);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    return io::parse_coefficients(read_file(file));
  }
};

/// Built-in set for d in 6..9, otherwise the LP optimum.
inline CoefficientSet default_coefficients(int d) {
  if (d >= 6 && d <= 9) return builtin_table2(d);
  auto sol = solve_min_a(d);
  if (sol.status != LpStatus::Optimal || !sol.verified)
    throw InvariantViolation("no verified coefficient set for d = " + std::to_string(d));
  return sol.coefficients();
}

inline std::string format_batch(const std::vector<Vertex>& batch) {
  std::string s = "[";
  for (std::size_t i = 0; i < batch.size(); ++i) s += (i ? ", " : "") + std::to_string(batch[i]);
  return s + "]";
}

inline void print_trace(const RunCertificate& cert, std::ostream& out) {
  for (std::size_t t = 0; t < cert.steps.size(); ++t) {
    const auto& st = cert.steps[t];
    out << "step " << t + 1 << ": " << (st.rule.empty() ? "batch" : st.rule) << ", batch " << format_batch(st.batch)
        << ", drop " << to_string(st.drop()) << (st.drop_ok ? "" : " (below |batch|*s)") << "\n";
  }
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  GraphSource graph;
  CoeffSource coeffs;
  std::string algorithm = "weight";
  std::optional<int> d;
  std::string out;
  bool trace = false;
};

inline int cmd_solve(const SolveArgs& a, std::ostream& out) {
  Graph g = a.graph.load();
  if (a.algorithm == "swap") {
    auto [left, right] = partition_swap(g);
    bool ok = detail::two_dominates(g, left) && detail::two_dominates(g, right);
    const auto& small = left.size() <= right.size() ? left : right;
    out << "|D| = " << small.size() << "\n";
    out << "bound = n/2 = " << to_decimal(make_rational(g.n(), 2)) << "\n";
    out << "parts: " << left.size() << " + " << right.size() << ", both 2-dominating: " << (ok ? "yes" : "no") << "\n";
    if (!a.out.empty()) {
      io::json j{{"version", io::kSchemaVersion}, {"n", g.n()}, {"A", left}, {"B", right}, {"valid_2dom", ok}};
      write_output(a.out, j.dump(2) + "\n", out);
    }
    return ok ? kOk : kFailed;
  }

  CoefficientSet c;
  if (a.coeffs.given()) {
    c = a.coeffs.load();
    if (a.d && *a.d != c.d) throw UsageError("--d disagrees with the coefficient set's d");
  } else {
    c = default_coefficients(a.d.value_or(g.n() > 0 ? min_degree(g) : 0));
  }

  RunCertificate cert;
  if (a.algorithm == "rule") {
    auto run = rule_greedy(g, c.d);
    cert = certify_run(g, c, run.batches);
  } else if (a.algorithm == "weight") {
    cert = weight_greedy(g, c).certificate;
  } else {
    throw UsageError("unknown algorithm '" + a.algorithm + "' (rule, weight, swap)");
  }
  if (a.trace) print_trace(cert, out);
  out << "|D| = " << cert.final_d.size() << "\n";
  out << "bound = (a/s)n = " << to_decimal(cert.bound()) << "\n";
  out << "2-dominating: " << (cert.valid_2dom ? "yes" : "no") << ", within bound: " << (cert.bound_ok ? "yes" : "no")
      << ", batch drops: " << (cert.all_drops_ok() ? "all >= |batch|*s" : "some below |batch|*s") << "\n";
  if (!a.out.empty()) write_output(a.out, io::to_json(cert).dump(2) + "\n", out);
  // Rule runs are judged on the outcome; their per-batch drops are informational.
  bool ok = cert.valid_2dom && cert.bound_ok && cert.all_consistent();
  if (a.algorithm == "weight") ok = ok && cert.ok();
  return ok ? kOk : kFailed;
}

inline int cmd_exact(const GraphSource& src, int limit, std::ostream& out) {
  Graph g = src.load();
  try {
    out << "gamma2 = " << exact_gamma2(g, limit) << "\n";
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

inline int cmd_check_coeffs(const CoeffSource& src, const std::string& path, std::ostream& out) {
  if (!src.given()) throw UsageError("one of --coeffs or --builtin is required");
  CoefficientSet c = src.load();
  auto report = check_conditions(c);
  if (!path.empty()) write_output(path, io::to_json(report).dump(2) + "\n", out);
  if (report.overall) {
    out << "41 condition families: all satisfied\n";
    return kOk;
  }
  for (const auto& v : report.verdicts)
    if (!v.satisfied) out << "violated " << v.label << ": " << v.text << " (margin " << to_string(v.slack) << ")\n";
  auto fams = report.failing_families();
  out << fams.size() << " of 41 condition families violated\n";
  return kFailed;
}

inline int cmd_optimize(int d, const std::string& path, std::ostream& out) {
  LpSolution sol;
  try {
    sol = solve_min_a(d);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (sol.status != LpStatus::Optimal) {
    out << "infeasible\n";
    return kFailed;
  }
  out << "a* = " << to_decimal(sol.objective) << "\n";
  out << "exact: " << to_string(sol.objective) << "\n";
  out << "verified: " << (sol.verified ? "yes" : "no") << (sol.vacuous ? " (vacuous, a* = s)" : "") << "\n";
  if (!path.empty()) write_output(path, io::to_json(sol).dump(2) + "\n", out);
  return sol.verified ? kOk : kFailed;
}

inline std::vector<int> table1_deltas() {
  std::vector<int> ds;
  for (int d = 6; d <= 27; ++d) ds.push_back(d);
  for (int d : {30, 40, 50, 60, 70, 80, 90, 100}) ds.push_back(d);
  return ds;
}

inline int cmd_table1(std::vector<int> deltas, std::ostream& out) {
  if (deltas.empty()) deltas = table1_deltas();
  bool ok = true;
  out << "delta,our_result,earlier_best,earlier_raw\n";
  for (int d : deltas) {
    if (d < 6) throw UsageError("table1 needs delta >= 6");
    auto sol = solve_min_a(d);
    ok = ok && sol.verified;
    auto ref = reference_bound(d);
    out << d << "," << (sol.status == LpStatus::Optimal ? to_decimal(sol.objective) : "infeasible") << ","
        << to_decimal(Rational(ref.capped)) << "," << to_decimal(Rational(ref.raw)) << "\n";
  }
  return ok ? kOk : kFailed;
}

inline int cmd_verify_corollary(std::ostream& out) {
  static const char* const kExpected[] = {"456883/918298", "140835095/301690439", "292954593/665571713",
                                          "60805963517/145812382205"};
  bool ok = true;
  for (const auto& [delta, q] : corollary_fractions()) {
    const std::string want = kExpected[delta - 6];
    const bool match = to_string(q) == want;
    const bool conds = check_conditions(builtin_table2(delta)).overall;
    ok = ok && match && conds;
    out << "delta " << delta << ": a/s = " << to_string(q) << " (" << to_decimal(q) << ") "
        << (match ? "matches" : "differs from " + want) << ", conditions " << (conds ? "satisfied" : "VIOLATED") << "\n";
  }
  return ok ? kOk : kFailed;
}

struct GenArgs {
  std::string named;
  int n = 0;
  int d = 0;
  std::uint64_t seed = 1;
  std::string out;
};

inline int cmd_gen(const GenArgs& a, std::ostream& out) {
  Graph g;
  try {
    g = !a.named.empty() ? gen_named(a.named) : gen_random_regular(a.n, a.d, a.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_output(a.out, serialize_edge_list(g), out);
  return kOk;
}

struct BenchArgs {
  std::vector<int> ds{6, 7, 8, 9};
  std::vector<int> ns{50, 100, 200};
  std::uint64_t seed = 1;
  int trials = 3;
  std::string out;
};

inline const char* kBenchHeader = "d,n,seed,algorithm,|D|,bound,ok";

struct BenchInstance {
  int d, n;
  std::uint64_t seed;
};

inline std::string bench_rows(const BenchInstance& inst, const CoefficientSet& c) {
  std::ostringstream rows;
  Graph g = gen_random_regular(inst.n, inst.d, inst.seed);
  const std::string prefix = std::to_string(inst.d) + "," + std::to_string(inst.n) + "," + std::to_string(inst.seed);
  const std::string bound = to_decimal(c.ratio() * inst.n);

  auto rule = rule_greedy(g, inst.d);
  auto rule_cert = certify_run(g, c, rule.batches);
  rows << prefix << ",rule," << rule.dominating_set.size() << "," << bound << ","
       << (rule_cert.valid_2dom && rule_cert.bound_ok ? "true" : "false") << "\n";

  auto weight = weight_greedy(g, c);
  rows << prefix << ",weight," << weight.dominating_set.size() << "," << bound << ","
       << (weight.certificate.ok() ? "true" : "false") << "\n";

  auto [left, right] = partition_swap(g);
  const bool swap_ok = detail::two_dominates(g, left) && detail::two_dominates(g, right);
  rows << prefix << ",swap," << std::min(left.size(), right.size()) << "," << to_decimal(make_rational(inst.n, 2))
       << "," << (swap_ok ? "true" : "false") << "\n";
  return rows.str();
}

inline int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.trials < 1) throw UsageError("--trials must be positive");
  std::vector<BenchInstance> insts;
  for (int d : a.ds)
    for (int n : a.ns)
      for (int t = 0; t < a.trials; ++t) {
        if (d < 6 || d >= n || (n * d) % 2 != 0)
          throw UsageError("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices for bench");
        insts.push_back({d, n, a.seed + static_cast<std::uint64_t>(t)});
      }
  std::sort(insts.begin(), insts.end(),
            [](const auto& x, const auto& y) { return std::tie(x.d, x.n, x.seed) < std::tie(y.d, y.n, y.seed); });

  std::map<int, CoefficientSet> coeffs;
  for (const auto& inst : insts)
    if (!coeffs.count(inst.d)) coeffs[inst.d] = default_coefficients(inst.d);

  std::vector<std::string> rows(insts.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < insts.size(); start += workers) {
    std::vector<std::future<std::string>> jobs;
    for (std::size_t k = start; k < std::min(insts.size(), start + workers); ++k)
      jobs.push_back(std::async(std::launch::async, bench_rows, insts[k], std::cref(coeffs.at(insts[k].d))));
    for (std::size_t k = 0; k < jobs.size(); ++k) rows[start + k] = jobs[k].get();
  }

  std::string csv = std::string(kBenchHeader) + "\n";
  bool ok = true;
  for (const auto& r : rows) {
    csv += r;
    ok = ok && r.find(",false\n") == std::string::npos;
  }
  write_output(a.out, csv, out);
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

/// Parses `args` (without the program name) and runs the subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-domination bounds: colored-graph greedy algorithms, exact coefficient checks, LP optimizer"};
  app.name("twodom");
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "build a 2-dominating set and certify it");
  solve.graph.attach(s);
  solve.coeffs.attach(s);
  s->add_option("--algorithm,-a", solve.algorithm, "rule | weight | swap")->check(CLI::IsMember({"rule", "weight", "swap"}));
  s->add_option("--d,-d", solve.d, "minimum-degree parameter (default: the graph's minimum degree)");
  s->add_option("--out", solve.out, "write the certificate JSON here");
  s->add_flag("--trace", solve.trace, "print every step");

  GraphSource exact_src;
  int limit = 24;
  auto* e = app.add_subcommand("exact", "exact 2-domination number of a small graph");
  exact_src.attach(e);
  e->add_option("--limit", limit, "largest n accepted")->check(CLI::Range(1, 64));

  CoeffSource check_src;
  std::string check_out;
  auto* cc = app.add_subcommand("check-coeffs", "verify a coefficient set against every bound condition");
  check_src.attach(cc);
  cc->add_option("--out", check_out, "write the condition report JSON here");

  int opt_d = 0;
  std::string opt_out;
  bool opt_table = false;
  std::vector<int> deltas;
  auto* o = app.add_subcommand("optimize", "minimize a over the bound conditions with s = 1");
  auto* od = o->add_option("--d,-d", opt_d, "minimum degree (>= 6)");
  o->add_option("--out", opt_out, "write the solution JSON here");
  auto* ot = o->add_flag("--table1", opt_table, "print the comparison table instead");
  o->add_option("--deltas", deltas, "delta list for --table1")->delimiter(',');
  od->excludes(ot);

  std::vector<int> table_deltas;
  auto* t1 = app.add_subcommand("table1", "LP optimum vs. the earlier bound, one CSV row per delta");
  t1->add_option("--deltas", table_deltas, "comma-separated delta list")->delimiter(',');

  auto* vc = app.add_subcommand("verify-corollary", "check the built-in sets' a/s fractions and conditions");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a named or random regular graph as an edge list");
  auto* gn = g->add_option("--named", gen.named, "K<n>, C<n>, P<n>, K4xK2");
  auto* gnn = g->add_option("--n", gen.n, "vertex count of a random regular graph");
  g->add_option("--d,-d", gen.d, "degree of a random regular graph");
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("--out", gen.out, "output file (default stdout)");
  gn->excludes(gnn);

  BenchArgs bench;
  auto* b = app.add_subcommand(
      "bench", "seed sweep over random regular graphs; CSV columns: d,n,seed,algorithm,|D|,bound,ok");
  b->add_option("--d,-d", bench.ds, "degrees (comma-separated)")->delimiter(',');
  b->add_option("--n", bench.ns, "vertex counts (comma-separated)")->delimiter(',');
  b->add_option("--seed", bench.seed, "first seed");
  b->add_option("--trials", bench.trials, "seeds per (d, n)");
  b->add_option("--out", bench.out, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out);
    if (e->parsed()) return cmd_exact(exact_src, limit, out);
    if (cc->parsed()) return cmd_check_coeffs(check_src, check_out, out);
    if (o->parsed()) {
      if (opt_table) return cmd_table1(deltas, out);
      if (od->count() == 0) throw UsageError("optimize needs --d");
      return cmd_optimize(opt_d, opt_out, out);
    }
    if (t1->parsed()) return cmd_table1(table_deltas, out);
    if (vc->parsed()) return cmd_verify_corollary(out);
    if (g->parsed()) {
      if (gen.named.empty() && (gen.n <= 0 || gen.d <= 0)) throw UsageError("gen needs --named or --n and --d");
      return cmd_gen(gen, out);
    }
    if (b->parsed()) return cmd_bench(bench, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const GenerationError& ex) {
    err << "error: " << ex.what() << "\n";
    return kFailed;
  } catch (const InvariantViolation& ex) {
    err << "invariant violated: " << ex.what() << "\n";
    return kFailed;
  }
  err << app.help();
  return kUsage;
}

}  // namespace twodom::cli
