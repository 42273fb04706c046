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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twodom/twodom.hpp"

using namespace twodom;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    if (!ok) {
      pass = false;
      notes.push_back(note);
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v, const std::string& summary) {
  std::cout << "AC" << id << " " << (v.pass ? "PASS" : "FAIL") << "  " << title << "  [" << summary << "]\n";
  for (const auto& n : v.notes) std::cout << "    " << n << "\n";
  if (!v.pass) ++failures;
}

std::string fmt(double x, int places = 5) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(places);
  s << x;
  return s.str();
}

// 1: the integer coefficient sets satisfy every condition; two rows are tight at delta 6.
void ac1() {
  Verdict v;
  auto t0 = Clock::now();
  for (int d = 6; d <= 9; ++d) {
    auto r = check_conditions(builtin_table2(d));
    v.require(r.overall, "delta " + std::to_string(d) + ": " + std::to_string(r.failing_families().size()) +
                             " families violated");
  }
  double elapsed = seconds_since(t0);
  auto r6 = check_conditions(builtin_table2(6));
  for (const char* label : {"(27)", "(35)"}) {
    auto* row = r6.find(label);
    v.require(row && row->slack == 0, std::string("delta 6 row ") + label + " slack is not exactly 0");
  }
  v.require(elapsed < 1.0, "took " + fmt(elapsed, 3) + " s");
  report(1, "coefficient tables satisfy all conditions", v, fmt(elapsed, 3) + " s");
}

// 2: reduced a/s of each integer set.
void ac2() {
  Verdict v;
  const char* expected[] = {"456883/918298", "140835095/301690439", "292954593/665571713",
                            "60805963517/145812382205"};
  for (const auto& [delta, q] : corollary_fractions())
    v.require(to_string(q) == expected[delta - 6],
              "delta " + std::to_string(delta) + ": got " + to_string(q) + ", want " + expected[delta - 6]);
  report(2, "a/s fractions of the integer tables", v, "4 fractions");
}

// 3: LP optimum per d against the reference row, tolerance 5e-5.
void ac3() {
  Verdict v;
  const double reference[] = {0.49754, 0.46682, 0.44016, 0.41702, 0.39679,
                              0.37957, 0.36459, 0.35117, 0.33914, 0.33385};
  auto t0 = Clock::now();
  int matched = 0;
  for (int d = 6; d <= 15; ++d) {
    auto sol = solve_min_a(d);
    if (sol.status != LpStatus::Optimal || !sol.verified) {
      v.require(false, "d=" + std::to_string(d) + ": no verified optimum");
      continue;
    }
    double got = std::stod(to_decimal(sol.objective));
    double want = reference[d - 6];
    bool ok = std::abs(got - want) <= 5e-5 + 1e-12;
    matched += ok;
    v.require(ok, "d=" + std::to_string(d) + ": a* = " + to_decimal(sol.objective) + " (" +
                      to_string(sol.objective) + "), reference " + fmt(want) + ", diff " + fmt(got - want));
  }
  double elapsed = seconds_since(t0);
  v.require(elapsed < 60.0, "took " + fmt(elapsed, 1) + " s");
  report(3, "LP optimum reproduces the reference a* for d = 6..15", v,
         std::to_string(matched) + "/10 within 5e-5, " + fmt(elapsed, 2) + " s");
}

// 4: capped reference bound.
void ac4() {
  Verdict v;
  const std::pair<int, double> rows[] = {{11, 0.49749}, {20, 0.33758}, {40, 0.20555}, {100, 0.10129}};
  for (auto [delta, want] : rows) {
    double got = reference_bound(delta).capped;
    v.require(std::abs(got - want) <= 5e-5,
              "delta " + std::to_string(delta) + ": " + fmt(got) + " vs " + fmt(want));
  }
  report(4, "reference bound row", v, "4 deltas");
}

struct SweepTotals {
  long runs = 0;
  long steps = 0;
  long inconsistent = 0;
};

// 5 (and the run data for 8): random regular sweep.
void ac5(SweepTotals& totals) {
  Verdict v;
  auto t0 = Clock::now();
  std::mt19937_64 rng(20260101);
  long violations = 0;
  for (int d = 6; d <= 9; ++d) {
    auto c = builtin_table2(d);
    std::uniform_int_distribution<int> pick_n(20, 200);
    for (int trial = 0; trial < 100; ++trial) {
      int n = pick_n(rng);
      if (n * d % 2) ++n;
      Graph g = gen_random_regular(n, d, rng());
      auto rule = rule_greedy(g, d);
      const auto rule_cert = certify_run(g, c, rule.batches);
      auto weight = weight_greedy(g, c);
      const auto& wc = weight.certificate;
      std::string tag = "d=" + std::to_string(d) + " n=" + std::to_string(n) + " trial " + std::to_string(trial);
      auto fail = [&](bool ok, const std::string& what) {
        if (!ok) ++violations;
        if (!ok && v.notes.size() < 20) v.notes.push_back(tag + ": " + what);
        if (!ok) v.pass = false;
      };
      fail(ColoredState::from_selection(std::make_shared<const Graph>(g), rule.dominating_set).is_2_dominating(),
           "rule greedy set not 2-dominating");
      fail(ColoredState::from_selection(std::make_shared<const Graph>(g), weight.dominating_set).is_2_dominating(),
           "weight greedy set not 2-dominating");
      fail(wc.all_drops_ok(), "a weight greedy batch dropped less than |batch|*s");
      fail(wc.bound_ok, "|D| = " + std::to_string(wc.final_d.size()) + " above (a/s)n");
      fail(wc.sweeps_ok(), "closing sweep inequality fails");
      for (const RunCertificate* cert : {&rule_cert, &wc}) {
        totals.runs += 1;
        totals.steps += static_cast<long>(cert->steps.size());
        for (const auto& st : cert->steps) totals.inconsistent += !st.state_consistent;
      }
    }
  }
  double elapsed = seconds_since(t0);
  v.require(elapsed < 300.0, "took " + fmt(elapsed, 1) + " s");
  report(5, "greedy soundness on 400 random regular graphs", v,
         std::to_string(violations) + " violations, " + fmt(elapsed, 1) + " s");
}

// 6: weights never increase under a select.
void ac6() {
  Verdict v;
  std::mt19937_64 rng(6);
  long events = 0, violations = 0;
  while (events < 1000) {
    int d = 6 + static_cast<int>(events / 250);
    auto c = builtin_table2(d);
    std::uniform_int_distribution<int> pick_n(20, 120);
    int n = pick_n(rng);
    if (n * d % 2) ++n;
    Graph g = gen_random_regular(n, d, rng());
    WeightTable table(c, g.max_degree());
    auto st = ColoredState::init(g);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<int> depth(0, n - 1);
    int warm = depth(rng);
    for (int i = 0; i < warm; ++i) st.select(order[static_cast<std::size_t>(i)]);
    // A handful of events from this prefix.
    for (int k = warm; k < std::min(n, warm + 10) && events < 1000; ++k, ++events) {
      auto before = st;
      st.select(order[static_cast<std::size_t>(k)]);
      auto tb = before.classify_type(d), ta = st.classify_type(d);
      bool ok = table.total(st) <= table.total(before);
      for (Vertex u = 0; u < n && ok; ++u) ok = table.vertex_weight(st, ta, u) <= table.vertex_weight(before, tb, u);
      if (!ok) {
        ++violations;
        v.require(false, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " event " + std::to_string(events));
      }
    }
  }
  report(6, "weights non-increasing over random select events", v,
         std::to_string(events) + " events, " + std::to_string(violations) + " violations");
}

// 7: exact oracle against the heuristics on small graphs.
void ac7() {
  Verdict v;
  v.require(exact_gamma2(complete_graph(4)) == 2, "gamma2(K4) != 2");
  v.require(exact_gamma2(k4_box_k2()) == 4, "gamma2(K4xK2) != 4");
  std::mt19937_64 rng(7);
  int graphs = 0;
  while (graphs < 50) {
    std::uniform_int_distribution<int> pick_d(3, 11);
    int d = pick_d(rng);
    std::uniform_int_distribution<int> pick_n(d + 1, 12);
    int n = pick_n(rng);
    if (n * d % 2) continue;
    Graph g = gen_random_regular(n, d, rng());
    ++graphs;
    std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d);
    int exact = exact_gamma2(g);
    auto [a, b] = partition_swap(g);
    auto dom = [&](const std::vector<Vertex>& s) {
      return ColoredState::from_selection(std::make_shared<const Graph>(g), s).is_2_dominating();
    };
    v.require(dom(a) && dom(b), tag + ": a partition part is not 2-dominating");
    const int small = static_cast<int>(std::min(a.size(), b.size()));
    v.require(small <= (n + 1) / 2, tag + ": smaller part larger than ceil(n/2)");
    v.require(exact <= small, tag + ": exact above partition swap");
    if (d >= 6) {
      int r = static_cast<int>(rule_greedy(g, d).dominating_set.size());
      int w = static_cast<int>(weight_greedy(g, builtin_table2(std::min(d, 9))).dominating_set.size());
      v.require(exact <= r && exact <= w, tag + ": exact above a greedy result");
    }
  }
  report(7, "exact oracle below every heuristic", v, std::to_string(graphs) + " graphs");
}

// 8: incremental state equals recomputation after every certified step.
void ac8(const SweepTotals& totals) {
  Verdict v;
  v.require(totals.inconsistent == 0, std::to_string(totals.inconsistent) + " mismatched steps");
  v.require(totals.steps > 0, "no certified steps recorded");
  report(8, "incremental coloring matches recomputation", v,
         std::to_string(totals.steps) + " steps over " + std::to_string(totals.runs) + " runs");
}

}  // namespace

int main() {
  SweepTotals totals;
  ac1();
  ac2();
  ac3();
  ac4();
  ac5(totals);
  ac6();
  ac7();
  ac8(totals);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
