// Copyright 2026 <Authors>
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

#include "cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsv/homogeneous.h"
#include "qsv/numeric.h"

namespace qsv::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "qsv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

json CliJson(std::vector<std::string> args, int want_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = Cli(args);
  EXPECT_EQ(r.code, want_code) << r.err;
  return json::parse(r.out);
}

TEST(ParseNumberTest, DecimalsAndFractions) {
  EXPECT_EQ(ParseNumber("0.25"), 0.25);
  EXPECT_EQ(ParseNumber("5/9"), 5.0 / 9.0);
  EXPECT_EQ(ParseNumber("1e-4"), 1e-4);
  EXPECT_THROW(ParseNumber("1/0"), std::runtime_error);
  EXPECT_THROW(ParseNumber("abc"), std::runtime_error);
  EXPECT_THROW(ParseNumber("0.5x"), std::runtime_error);
}

TEST(ParseRangeTest, EndpointsInclusive) {
  const std::vector<double> xs = ParseRange("0:1:5");
  ASSERT_EQ(xs.size(), 5u);
  EXPECT_EQ(xs.front(), 0.0);
  EXPECT_EQ(xs[2], 0.5);
  EXPECT_EQ(xs.back(), 1.0);
  EXPECT_EQ(ParseRange("1/3:1:1"), std::vector<double>{1.0 / 3.0});
  EXPECT_THROW(ParseRange("0:1"), std::runtime_error);
  EXPECT_THROW(ParseRange("0:1:0"), std::runtime_error);
}

TEST(CliSchemaTest, StableTopLevelKeys) {
  const json j = CliJson({"analyze", R"({"homogeneous":{"lambda":0.5}})"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"provenance", "request", "results", "warnings"}));
}

TEST(CliSchemaTest, EveryResultHasProvenance) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", R"({"eigenvalues":[1,0.5,0.1]})", "--N", "4", "--epsilon", "0.1",
            "--delta", "0.1"},
           {"plan", R"({"eigenvalues":[1,0.5,0]})", "--epsilon", "0.1", "--delta", "0.1",
            "--adversarial"},
           {"table1", "--epsilon", "0.01", "--delta", "0.01"}}) {
    const json j = CliJson(args);
    for (const auto& [name, v] : j["results"].items()) {
      if (name == "rows") continue;
      EXPECT_TRUE(j["provenance"].contains(name)) << name;
      EXPECT_FALSE(j["provenance"][name].get<std::string>().empty()) << name;
    }
  }
}

TEST(CliAnalyzeTest, HomogeneousCriticalDelta) {
  const json j = CliJson({"analyze", R"({"homogeneous":{"lambda":0.5}})", "--N", "3"});
  EXPECT_NEAR(j["results"]["delta_c"].get<double>(), 0.125, 1e-12);
  EXPECT_NEAR(j["results"]["nu"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(j["request"]["N"], 3);
}

TEST(CliAnalyzeTest, ThreeLevelHFactor) {
  const json j = CliJson({"analyze", R"({"eigenvalues":[1,0.5,0.1]})"});
  EXPECT_NEAR(j["results"]["h"].get<double>(), 4.3429, 5e-5);
  EXPECT_NEAR(j["results"]["beta_tilde"].get<double>(), 0.1, 1e-12);
  EXPECT_EQ(j["provenance"]["h"], "h-factor");
}

TEST(CliAnalyzeTest, TwelveSignificantDigitsInJson) {
  const Result r = Cli({"analyze", R"({"eigenvalues":[1,0.5,0.1]})", "--format", "json"});
  EXPECT_NE(r.out.find("4.34294481903"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("4.342944819032"), std::string::npos);
}

TEST(CliAnalyzeTest, SixSignificantDigitsInText) {
  const Result r = Cli({"analyze", R"({"eigenvalues":[1,0.5,0.1]})"});
  EXPECT_NE(r.out.find("4.34294 "), std::string::npos) << r.out;
}

TEST(CliAnalyzeTest, MissingUnitEigenvalueIsInputError) {
  const Result r = Cli({"analyze", R"({"eigenvalues":[0.9,0.5]})"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("MissingUnitEigenvalue"), std::string::npos);
}

TEST(CliAnalyzeTest, MalformedInputIsInputError) {
  EXPECT_EQ(Cli({"analyze", "{not json"}).code, kExitInputError);
  EXPECT_EQ(Cli({"analyze", R"({"spectrum":[1]})"}).code, kExitInputError);
  EXPECT_EQ(Cli({"analyze", "/nonexistent/strategy.json"}).code, kExitInputError);
  EXPECT_EQ(Cli({"analyze"}).code, kExitInputError);
  EXPECT_EQ(Cli({"nosuchcommand"}).code, kExitInputError);
}

TEST(CliAnalyzeTest, ReadsStdin) {
  const Result r = Cli({"analyze", "-", "--format", "json"}, R"({"eigenvalues":[1,"1/4"]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["results"]["nu"].get<double>(), 0.75, 1e-12);
}

TEST(CliAnalyzeTest, CapOverflowIsNumericalFailure) {
  const Result r = Cli({"analyze", R"({"eigenvalues":[1,0.5,0.2]})", "--N", "50", "--delta",
                        "0.1", "--cap", "10"});
  EXPECT_EQ(r.code, kExitNumericalFailure);
  EXPECT_NE(r.err.find("SizeLimit"), std::string::npos);
}

TEST(CliAnalyzeTest, TinyGapReportsAsymptoticCount) {
  const json j = CliJson({"analyze", R"({"homogeneous":{"lambda":0.99999999999}})", "--epsilon",
                          "0.01", "--delta", "0.1"});
  EXPECT_TRUE(j["results"].contains("num_tests_na_asymptotic"));
  EXPECT_FALSE(j["results"].contains("num_tests_na"));
  EXPECT_EQ(j["warnings"].size(), 1u);
}

TEST(CliPlanTest, HomogeneousOptimalLambda) {
  const PrecisionTarget t(0.01, 0.01);
  const json j = CliJson({"plan", R"({"homogeneous":{"lambda":0.36787944117144233}})",
                          "--epsilon", "0.01", "--delta", "0.01", "--adversarial"});
  const json& r = j["results"];
  const std::int64_t n = r["num_tests_adv"].get<std::int64_t>();
  EXPECT_EQ(n, MinTestsHomogeneous(t, kInvE).num_tests);
  EXPECT_EQ(n, 1212);
  EXPECT_LE(r["num_tests_adv_lower"].get<std::int64_t>(), n);
  EXPECT_GE(r["num_tests_adv_upper"].get<std::int64_t>(), n);
  EXPECT_EQ(r["num_tests_na"], 727);
  EXPECT_EQ(j["provenance"]["num_tests_adv"], "homogeneous-closed-form");
}

TEST(CliPlanTest, StabilizerProtocolUnderLogBound) {
  const json j = CliJson({"plan", R"({"protocol":{"family":"StabilizerQubit","n":5}})",
                          "--epsilon", "0.01", "--delta", "0.001", "--adversarial"});
  const double n = j["results"]["num_tests_adv"].get<double>();
  EXPECT_LT(n, 2.89 * std::log(1000.0) / 0.01);
  EXPECT_LT(j["results"]["log_coefficient"].get<double>(), 2.89);
}

TEST(CliPlanTest, UnhedgedSingularWarnsAboutScaling) {
  const json j = CliJson({"plan", R"({"eigenvalues":[1,0.5,0]})", "--epsilon", "0.1",
                          "--delta", "0.1", "--adversarial", "--hedge", "none"});
  ASSERT_EQ(j["warnings"].size(), 1u);
  EXPECT_NE(j["warnings"][0].get<std::string>().find("1/delta"), std::string::npos);
  // Singular, nu = 1/2: the exact count equals the singular lower bound.
  EXPECT_EQ(j["results"]["num_tests_adv"], j["results"]["singular_lower"]);
}

TEST(CliPlanTest, AutoHedgeBeatsNoHedge) {
  const auto run = [](const char* hedge) {
    return CliJson({"plan", R"({"eigenvalues":[1,0.5,0]})", "--epsilon", "0.1", "--delta",
                    "0.1", "--adversarial", "--hedge", hedge});
  };
  const json none = run("none"), autoh = run("auto"), fixed = run("p=0.1");
  EXPECT_LT(autoh["results"]["num_tests_adv"].get<int>(), none["results"]["num_tests_adv"].get<int>());
  EXPECT_EQ(autoh["provenance"]["hedge_p"], "optimal-hedge");
  EXPECT_LT(autoh["results"]["num_tests_adv"].get<double>(),
            autoh["results"]["hedged_bound"].get<double>());
  EXPECT_NEAR(fixed["results"]["hedge_p"].get<double>(), 0.1, 1e-15);
  EXPECT_EQ(Cli({"plan", R"({"eigenvalues":[1,0.5,0]})", "--epsilon", "0.1", "--delta", "0.1",
                 "--adversarial", "--hedge", "maybe"})
                .code,
            kExitInputError);
}

TEST(CliPlanTest, CapOverflowLeavesBoundsWithWarning) {
  const json j = CliJson({"plan", R"({"eigenvalues":[1,0.6,0.3]})", "--epsilon", "0.05",
                          "--delta", "0.05", "--adversarial", "--hedge", "none", "--cap", "50"});
  EXPECT_FALSE(j["results"].contains("num_tests_adv"));
  EXPECT_TRUE(j["results"].contains("nonsingular_upper"));
  EXPECT_EQ(j["warnings"].size(), 1u);
}

TEST(CliPlanTest, MissingTargetIsInputError) {
  EXPECT_EQ(Cli({"plan", R"({"homogeneous":{"lambda":0.5}})"}).code, kExitInputError);
  EXPECT_EQ(Cli({"plan", R"({"homogeneous":{"lambda":0.5}})", "--epsilon", "0", "--delta",
                 "0.1"})
                .code,
            kExitInputError);
}

std::vector<std::vector<std::string>> CsvRows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (line.empty() || line[0] == '#') continue;
    rows.emplace_back();
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) rows.back().push_back(cell);
  }
  return rows;
}

TEST(CliSweepTest, DeltaAtZeroLambdaFollowsInverseDelta) {
  const Result r = Cli({"sweep", "--param", "delta", "--range", "0.05:0.95:19", "--epsilon",
                        "0.1", "--lambda", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = CsvRows(r.out);
  ASSERT_EQ(rows.size(), 20u);
  EXPECT_EQ(rows[0][0], "delta[input]");
  EXPECT_EQ(rows[0][1], "num_tests_adv[homogeneous-closed-form]");
  for (size_t i = 1; i < rows.size(); ++i) {
    const double delta = std::stod(rows[i][0]);
    const double approx = (1 - delta) / (0.1 * delta);
    EXPECT_EQ(std::stoll(rows[i][1]), std::max<std::int64_t>(1, CeilGuarded(approx)));
  }
}

TEST(CliSweepTest, LambdaUShapeNearInverseE) {
  const Result r = Cli({"sweep", "--param", "lambda", "--range", "0.05:0.95:91", "--epsilon",
                        "0.01", "--delta", "1e-4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = CsvRows(r.out);
  double best_lambda = 0;
  std::int64_t best = INT64_MAX;
  for (size_t i = 1; i < rows.size(); ++i) {
    const std::int64_t n = std::stoll(rows[i][1]);
    if (n < best) best = n, best_lambda = std::stod(rows[i][0]);
  }
  EXPECT_NEAR(best_lambda, kInvE, 0.05);
  EXPECT_GT(std::stoll(rows[1][1]), 2 * best);
  EXPECT_GT(std::stoll(rows.back()[1]), 2 * best);
}

TEST(CliSweepTest, EpsilonOverheadDecreasing) {
  const json j = CliJson({"sweep", "--param", "epsilon", "--range", "0:0.5:51"});
  double prev = 2.0;
  for (const json& row : j["results"]["rows"]) {
    const double v = row["normalized_overhead_optimal"].get<double>();
    EXPECT_LT(v, prev + 1e-12);
    EXPECT_GE(v, 0.965);
    prev = v;
  }
}

TEST(CliSweepTest, BadRangeIsInputError) {
  EXPECT_EQ(Cli({"sweep", "--param", "nu", "--range", "0.1:0.5"}).code, kExitInputError);
  EXPECT_EQ(Cli({"sweep", "--param", "nu", "--range", "a:b:3"}).code, kExitInputError);
  EXPECT_EQ(Cli({"sweep", "--param", "mu", "--range", "0:1:3"}).code, kExitInputError);
}

TEST(CliSingleCopyTest, TwoOptimalStrategiesAtFiveNinths) {
  const json j = CliJson({"single-copy", "--epsilon", "0.8", "--delta", "5/9"});
  EXPECT_TRUE(j["results"]["feasible"].get<bool>());
  ASSERT_EQ(j["results"]["optimal_lambdas"].size(), 2u);
  EXPECT_NEAR(j["results"]["optimal_lambdas"][1].get<double>(), 1.0 / 3.0, 1e-12);
}

TEST(CliSingleCopyTest, InfeasibleExitsTwoWithVerdict) {
  const json j = CliJson({"single-copy", "--epsilon", "0.1", "--delta", "0.1"}, kExitInfeasible);
  EXPECT_EQ(j["results"]["verdict"], "infeasible");
}

TEST(CliSingleCopyTest, BoundaryEpsilonFeasible) {
  const Result r = Cli({"single-copy", "--epsilon", "0.828427124747", "--delta", "0.5"});
  EXPECT_EQ(r.code, 0) << r.out;
  const Result below = Cli({"single-copy", "--epsilon", "0.8284", "--delta", "0.5"});
  EXPECT_EQ(below.code, kExitInfeasible);
}

TEST(CliSingleCopyTest, GeneralStrategyVerdict) {
  EXPECT_EQ(Cli({"single-copy", "--epsilon", "0.9", "--delta", "0.5", "--beta", "0.3", "--tau", "0.3"}).code,
            kExitOk);
  EXPECT_EQ(Cli({"single-copy", "--epsilon", "0.9", "--delta", "0.5", "--beta", "0.3"}).code,
            kExitInfeasible);
}

TEST(CliTable1Test, JsonRoundTrip) {
  const Result r = Cli({"table1", "--epsilon", "0.01", "--delta", "0.01", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  const json& rows = j["results"]["rows"];
  ASSERT_EQ(rows.size(), 9u);
  const std::vector<int> na = {691, 691, 691, 922, 691, 1382, 1382, 1382, 1382};
  for (size_t i = 0; i < 9; ++i) EXPECT_EQ(rows[i]["n_na_formula"], na[i]);
  EXPECT_EQ(json::parse(j.dump()), j);
}

TEST(CliTable1Test, CsvHasHeaderAndNineRows) {
  const Result r = Cli({"table1", "--epsilon", "0.01", "--delta", "0.01", "--format", "csv"});
  EXPECT_EQ(CsvRows(r.out).size(), 10u);
}

TEST(CliSimulateTest, BlockMatchesMixtureAndIsDeterministic) {
  const std::vector<std::string> args = {
      "simulate", "block",
      R"({"eigenvalues":[1,0.5,0.2],"block":{"compositions":[[2,1,1],[4,0,0]],"weights":[0.5,0.5]}})",
      "--N", "3", "--trials", "20000", "--seed", "9", "--format", "json"};
  const Result a = Cli(args), b = Cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  // (2,1,1): drop one slot uniformly, 0.5*0.1 + 0.25*0.2 + 0.25*0.5 = 0.225; (4,0,0) passes.
  EXPECT_NEAR(j["results"]["pass_expected"].get<double>(), 0.6125,
              1e-12);
  EXPECT_LT(std::abs(j["results"]["pass_z_score"].get<double>()), 5.0);
  EXPECT_EQ(j["results"]["rng"], "splitmix64-counter");
}

TEST(CliSimulateTest, EstimatorAndIid) {
  const json e = CliJson({"simulate", "estimator", "--lambda", "1/3", "--fidelity", "0.9", "--N",
                          "100", "--trials", "5000"});
  EXPECT_NEAR(e["results"]["mean_fidelity"].get<double>(), 0.9, 0.01);
  const json i = CliJson({"simulate", "iid", R"({"homogeneous":{"lambda":0.5},"state":{"weights":[0.9,0.1]}})",
                          "--N", "5", "--trials", "20000"});
  EXPECT_NEAR(i["results"]["pass_expected"].get<double>(), std::pow(0.95, 5), 1e-12);
  EXPECT_EQ(Cli({"simulate", "iid", R"({"homogeneous":{"lambda":0.5}})", "--N", "5"}).code,
            kExitInputError);
}

}  // namespace
}  // namespace qsv::cli
