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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace twodom {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("twodom_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, ExactNamed) {
  auto r = run({"exact", "--named", "K4xK2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gamma2 = 4\n");
  EXPECT_EQ(run({"exact", "--named", "K4"}).out, "gamma2 = 2\n");
}

TEST(Cli, ExactTooLarge) { EXPECT_EQ(run({"exact", "--named", "K30"}).code, 2); }

TEST(Cli, CheckBuiltin) {
  for (const char* d : {"6", "7", "8", "9"}) {
    auto r = run({"check-coeffs", "--builtin", d});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "41 condition families: all satisfied\n");
  }
  EXPECT_EQ(run({"check-coeffs", "--builtin", "5"}).code, 2);
  EXPECT_EQ(run({"check-coeffs"}).code, 2);
}

TEST(Cli, CheckFileRoundTripAndViolation) {
  auto good = io::to_json(builtin_table2(6));
  auto path = temp_file("good.json", good.dump());
  EXPECT_EQ(run({"check-coeffs", "--coeffs", path.string()}).code, 0);

  auto bad = good;
  bad["b"][1] = "0";
  auto bad_path = temp_file("bad.json", bad.dump());
  auto r = run({"check-coeffs", "--coeffs", bad_path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violated (35)"), std::string::npos);

  auto broken = temp_file("broken.json", "{\"d\": 6, ");
  EXPECT_EQ(run({"check-coeffs", "--coeffs", broken.string()}).code, 2);
  EXPECT_EQ(run({"check-coeffs", "--coeffs", "/nonexistent/coeffs.json"}).code, 2);
}

TEST(Cli, CoefficientFileAcceptsFractions) {
  auto j = io::to_json(builtin_table2(6).normalized());
  EXPECT_TRUE(j["a"].is_string());
  auto back = io::coefficients_from_json(j);
  EXPECT_EQ(back, builtin_table2(6).normalized());
  j["a"] = 1;
  j["d"] = "six";
  EXPECT_THROW(io::coefficients_from_json(j), ParseError);
}

TEST(Cli, OptimizePrintsRoundedOptimum) {
  auto r = run({"optimize", "-d", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "a* = " + to_decimal(solve_min_a(6).objective));

  auto path = std::filesystem::temp_directory_path() / "twodom_cli_test_opt.json";
  EXPECT_EQ(run({"optimize", "--d", "7", "--out", path.string()}).code, 0);
  std::ifstream in(path);
  auto j = io::json::parse(in);
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["d"], 7);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["a_star"], to_string(solve_min_a(7).objective));
  EXPECT_EQ(j["assignment"].size(), 1u + 9u + 8u);

  EXPECT_EQ(run({"optimize", "-d", "4"}).code, 2);
  EXPECT_EQ(run({"optimize"}).code, 2);
}

TEST(Cli, Table1Rows) {
  auto r = run({"table1", "--deltas", "11,20"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, row11, row20;
  std::getline(lines, header);
  std::getline(lines, row11);
  std::getline(lines, row20);
  EXPECT_EQ(header, "delta,our_result,earlier_best,earlier_raw");
  EXPECT_EQ(row11.substr(0, 3), "11,");
  auto fields = [](const std::string& row) {
    std::vector<double> v;
    std::istringstream in(row);
    for (std::string f; std::getline(in, f, ',');) v.push_back(std::stod(f));
    return v;
  };
  auto f11 = fields(row11), f20 = fields(row20);
  ASSERT_EQ(f11.size(), 4u);
  ASSERT_EQ(f20.size(), 4u);
  EXPECT_NEAR(f11[2], 0.49749, 5e-5);
  EXPECT_NEAR(f20[2], 0.33758, 5e-5);
  EXPECT_EQ(f11[2], f11[3]);  // below the 1/2 cap
  EXPECT_NEAR(f20[1], 0.32074, 5e-5);
  EXPECT_EQ(run({"optimize", "--table1", "--deltas", "11,20"}).out, r.out);
}

TEST(Cli, VerifyCorollary) {
  auto r = run({"verify-corollary"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("456883/918298"), std::string::npos);
  EXPECT_EQ(r.out.find("differs"), std::string::npos);
}

TEST(Cli, GenAndSolve) {
  auto g = run({"gen", "--n", "40", "--d", "7", "--seed", "9"});
  EXPECT_EQ(g.code, 0);
  auto path = temp_file("g.txt", g.out);
  EXPECT_EQ(parse_edge_list(g.out), gen_random_regular(40, 7, 9));

  auto cert_path = std::filesystem::temp_directory_path() / "twodom_cli_test_cert.json";
  auto w = run({"solve", "--graph", path.string(), "--out", cert_path.string()});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("|D| = "), std::string::npos);
  EXPECT_NE(w.out.find("bound = (a/s)n = "), std::string::npos);
  std::ifstream in(cert_path);
  auto cert = io::json::parse(in);
  EXPECT_EQ(cert["version"], 1);
  EXPECT_TRUE(cert["valid_2dom"].get<bool>());
  EXPECT_TRUE(cert["all_drops_ok"].get<bool>());
  EXPECT_EQ(cert["coefficients"]["d"], 7);

  auto rule = run({"solve", "--graph", path.string(), "--algorithm", "rule", "--trace"});
  EXPECT_EQ(rule.code, 0);
  EXPECT_NE(rule.out.find("step 1: rule 1, batch [0], drop "), std::string::npos);

  auto swap = run({"solve", "--graph", path.string(), "-a", "swap"});
  EXPECT_EQ(swap.code, 0);
  EXPECT_NE(swap.out.find("both 2-dominating: yes"), std::string::npos);

  auto d6 = run({"solve", "--graph", path.string(), "--d", "6"});
  EXPECT_EQ(d6.code, 0);
  EXPECT_EQ(run({"solve", "--graph", path.string(), "--builtin", "6", "--d", "7"}).code, 2);
}

TEST(Cli, SolveLargeDegreeUsesLpOptimum) {
  auto path = temp_file("g12.txt", serialize_edge_list(gen_random_regular(30, 12, 1)));
  auto r = run({"solve", "--graph", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2-dominating: yes"), std::string::npos);
}

TEST(Cli, SolvePreconditionsAndUsage) {
  EXPECT_EQ(run({"solve", "--named", "K4xK2"}).code, 2);
  EXPECT_EQ(run({"solve", "--named", "K4xK2", "-a", "swap"}).code, 0);
  EXPECT_EQ(run({"solve", "--named", "C6", "-a", "swap"}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", "--named", "K7", "-a", "bogus"}).code, 2);
  EXPECT_EQ(run({"solve", "--graph", "/nonexistent/g.txt"}).code, 2);
  auto bad = temp_file("bad.txt", "0 1\n1 1\n");
  auto r = run({"solve", "--graph", bad.string(), "-a", "swap"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, UnknownSubcommandOrFlag) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"exact", "--named", "K4", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("bench"), std::string::npos);
}

TEST(Cli, BenchDeterministic) {
  std::vector<std::string> args{"bench", "--d", "6,7", "--n", "30,40", "--seed", "5", "--trials", "2"};
  auto first = run(args);
  auto second = run(args);
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  std::istringstream lines(first.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "d,n,seed,algorithm,|D|,bound,ok");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "true");
  }
  EXPECT_EQ(rows, 2 * 2 * 2 * 3);
  EXPECT_EQ(run({"bench", "--d", "7", "--n", "31"}).code, 2);
}

}  // namespace
}  // namespace twodom
