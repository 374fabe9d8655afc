/*
   Copyright 2026 The circlezero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "circlezero/cli/app.hpp"
#include "circlezero/cli/exit_codes.hpp"
#include "circlezero/cli/serialize.hpp"

namespace {

namespace cli = circlezero::cli;
using cli::Json;
using cli::Outcome;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args, int expected_code = 0) {
  const Invocation r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

int oracle_code(const std::vector<Outcome>& v) {
  int rank = 0;  // ok < indeterminate < refuted < numeric failure
  for (auto o : v) {
    const int r = o == Outcome::ok ? 0 : o == Outcome::indeterminate ? 1 : o == Outcome::refuted ? 2 : 3;
    rank = std::max(rank, r);
  }
  return std::vector<int>{0, 3, 1, 4}[rank];
}

TEST(ExitCodes, PriorityProperty) {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> pick(0, 3), len(0, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Outcome> v(static_cast<size_t>(len(rng)));
    for (auto& o : v) o = static_cast<Outcome>(pick(rng));
    EXPECT_EQ(cli::exit_code_for(v), oracle_code(v));
  }
  EXPECT_EQ(cli::exit_code_for({}), cli::kOk);
  EXPECT_EQ(cli::exit_code_for({Outcome::ok, Outcome::indeterminate}), cli::kIndeterminate);
  EXPECT_EQ(cli::exit_code_for({Outcome::indeterminate, Outcome::refuted}), cli::kRefuted);
  EXPECT_EQ(cli::exit_code_for({Outcome::refuted, Outcome::numeric_failure, Outcome::ok}), cli::kNumericFailure);
}

TEST(Gen, SKTwo) {
  const Json doc = run_json({"gen", "--family", "S", "--k", "2"});
  EXPECT_EQ(doc["schema"], "circlezero/1");
  EXPECT_EQ(doc["command"], "gen");
  ASSERT_EQ(doc["results"].size(), 1u);
  std::vector<std::string> a;
  for (const auto& c : doc["results"][0]["coefficients"]) a.push_back(c["a"]);
  EXPECT_EQ(a, (std::vector<std::string>{"5", "6", "5"}));
  EXPECT_EQ(doc["exit_code"], 0);
}

TEST(Gen, PKTwoTriples) {
  const Json doc = run_json({"gen", "--family", "P", "--k", "2"});
  const auto& c = doc["results"][0]["coefficients"];
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c[0]["a"], "-1/90");
  EXPECT_EQ(c[1]["b"], "1");
  EXPECT_EQ(c[2]["a"], "-1/18");
  EXPECT_EQ(c[3]["b"], "1");
  EXPECT_EQ(c[4]["a"], "-1/90");
  EXPECT_EQ(doc["results"][0]["pi_power"], 3);
}

TEST(Gen, YKTwoSingleCoefficient) {
  const Json doc = run_json({"gen", "--family", "Y", "--k", "2"});
  const auto& r = doc["results"][0];
  EXPECT_EQ(r["degree"], 1);
  int nonzero = 0;
  for (const auto& c : r["coefficients"]) nonzero += c["a"] != "0" || c["b"] != "0";
  EXPECT_EQ(nonzero, 1);
}

TEST(Gen, AllFamiliesClampToMinimum) {
  const Json doc = run_json({"gen", "--family", "all", "--k-range", "1..3"});
  // R, S from k = 1; P, Q, Y, W from k = 2
  EXPECT_EQ(doc["results"].size(), 3u + 2 + 2 + 2 + 2 + 3);
}

TEST(Verify, WTwoRoots) {
  const Json doc = run_json({"verify", "--family", "W", "--k", "2", "--method", "roots"});
  const auto& r = doc["results"][0];
  EXPECT_EQ(r["zeros_on_circle"], 4);
  EXPECT_EQ(r["status"], "certified");
  EXPECT_LT(std::stod(r["max_modulus_deviation"]["mid"].get<std::string>()) +
                std::stod(r["max_modulus_deviation"]["rad"].get<std::string>()),
            1e-25);
}

TEST(Verify, SCriteriaAllCertified) {
  const Json doc = run_json({"verify", "--family", "S", "--k-range", "1..50", "--method", "criteria"});
  ASSERT_EQ(doc["results"].size(), 50u);
  for (const auto& r : doc["results"]) EXPECT_EQ(r["status"], "certified");
  EXPECT_EQ(doc["summary"]["ok"], 50);
}

TEST(Verify, PSignCountSlice) {
  const Json doc = run_json({"verify", "--family", "P", "--k-range", "2..30", "--method", "sign-count"});
  ASSERT_EQ(doc["results"].size(), 29u);
  for (const auto& r : doc["results"]) EXPECT_EQ(r["status"], "certified");
}

TEST(Verify, RefutedAndIndeterminateExitCodes) {
  EXPECT_EQ(run({"verify", "--family", "R", "--k", "3", "--method", "roots"}).code, cli::kRefuted);
  EXPECT_EQ(run({"verify", "--family", "P", "--k", "2", "--method", "criteria"}).code, cli::kIndeterminate);
  const Json doc = run_json({"verify", "--family", "P,R", "--k", "3", "--method", "criteria,roots"}, cli::kRefuted);
  EXPECT_EQ(doc["results"].size(), 4u);
  EXPECT_EQ(doc["exit_code"], cli::kRefuted);
}

TEST(Verify, AllMethods) {
  const Json doc = run_json({"verify", "--family", "S", "--k", "4", "--method", "all"});
  ASSERT_EQ(doc["results"].size(), 4u);
  EXPECT_EQ(doc["results"][0]["method"], "criteria");
  EXPECT_EQ(doc["results"][3]["method"], "roots");
}

TEST(Criteria, YPositiveMargins) {
  const Json doc = run_json({"criteria", "--family", "Y", "--k-range", "3..20"});
  ASSERT_EQ(doc["results"].size(), 18u);
  for (const auto& r : doc["results"]) {
    EXPECT_EQ(r["holds"], "certified-true");
    EXPECT_GT(std::stod(r["margin"]["mid"].get<std::string>()), 0.0);
  }
}

TEST(Zeta, ApproxOneSixDecimals) {
  const Json doc = run_json({"zeta", "approx1", "--bits", "128"});
  ASSERT_EQ(doc["results"].size(), 1u);
  EXPECT_GE(doc["results"][0]["matched_decimals"], 6);
  const Json both = run_json({"zeta"});
  ASSERT_EQ(both["results"].size(), 2u);
  EXPECT_GE(both["results"][1]["matched_decimals"], 4);
}

TEST(Identity, ObservationAllHold) {
  const Json doc = run_json({"identity", "observation", "--k-range", "2..50"});
  ASSERT_EQ(doc["results"].size(), 49u);
  for (const auto& r : doc["results"]) EXPECT_TRUE(r["holds"].get<bool>());
}

TEST(Identity, CustomGrid) {
  const Json doc = run_json({"identity", "ramanujan", "--k", "3", "--z", "1/2", "--z", "0.3+0.7i", "--z", "2-1i"});
  ASSERT_EQ(doc["results"].size(), 3u);
  for (const auto& r : doc["results"]) EXPECT_TRUE(r["holds"].get<bool>());
  EXPECT_EQ(run({"identity", "ramanujan", "--z", "-1"}).code, cli::kUsage);
  EXPECT_EQ(run({"identity", "sech", "--z", "1+1i"}).code, cli::kUsage);
}

TEST(Identity, AllDefaultsHold) {
  const Invocation r = run({"identity", "all", "--format", "text"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("holds=false"), std::string::npos);
}

TEST(Usage, ErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "X", "--k", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "P", "--k", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "P", "--k-range", "5..3"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "P", "--k-range", "a..3"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "P", "--k", "2", "--k-range", "2..3"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "P"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "P", "--k", "2", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "P", "--k", "2", "--workers", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--family", "P", "--k", "2", "--method", "magic"}).code, cli::kUsage);
  EXPECT_EQ(run({"zeta", "approx9"}).code, cli::kUsage);
  EXPECT_EQ(run({"identity", "nonsense"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--family", "P", "--k", "2", "--bits", "32"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Precision, EnvironmentDefaultAndOverride) {
  ::setenv("CIRCLEZERO_BITS", "256", 1);
  const Json a = run_json({"criteria", "--family", "S", "--k", "3"});
  EXPECT_EQ(a["config"]["bits"], 256);
  const Json b = run_json({"criteria", "--family", "S", "--k", "3", "--bits", "192"});
  EXPECT_EQ(b["config"]["bits"], 192);
  ::setenv("CIRCLEZERO_BITS", "12", 1);
  EXPECT_EQ(run({"criteria", "--family", "S", "--k", "3"}).code, cli::kUsage);
  ::unsetenv("CIRCLEZERO_BITS");
  const Json c = run_json({"criteria", "--family", "S", "--k", "3"});
  EXPECT_EQ(c["config"]["bits"], 128);
}

TEST(Output, DeterministicAcrossRunsAndWorkers) {
  const std::vector<std::string> base{"verify", "--family", "P,Q,S", "--k-range", "2..9", "--method", "sign-count,roots"};
  auto with_workers = [&](const std::string& w) {
    auto args = base;
    args.insert(args.end(), {"--workers", w});
    return run(args);
  };
  const Invocation a = with_workers("3"), b = with_workers("3"), c = with_workers("1");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["results"], Json::parse(c.out)["results"]);
}

TEST(Output, CsvAndTextProjections) {
  const Invocation csv = run({"criteria", "--family", "S", "--k-range", "1..4", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  std::istringstream in(csv.out);
  std::string header, line;
  std::getline(in, header);
  EXPECT_NE(header.find("margin_mid"), std::string::npos);
  EXPECT_NE(header.find("margin_rad"), std::string::npos);
  int rows = 0;
  while (std::getline(in, line)) rows += !line.empty();
  EXPECT_EQ(rows, 4);
  const Invocation text = run({"gen", "--family", "S", "--k", "2", "--format", "text"});
  EXPECT_NE(text.out.find("family=S k=2"), std::string::npos);
}

TEST(Output, WritesFile) {
  const std::string path = ::testing::TempDir() + "circlezero_cli_out.json";
  const Invocation r = run({"gen", "--family", "S", "--k", "2", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const Json doc = Json::parse(f);
  EXPECT_EQ(doc["results"][0]["k"], 2);
}

TEST(Serialize, RationalAndCsvQuoting) {
  EXPECT_EQ(cli::rational_string(circlezero::exact::BigRational(-6, 4)), "-3/2");
  Json rows = Json::array();
  rows.push_back(Json{{"name", "a,b"}, {"list", {1, 2}}});
  EXPECT_EQ(cli::to_csv(rows), "name,list\n\"a,b\",1;2\n");
}

}  // namespace
