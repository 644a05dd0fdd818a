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

#include "qsv/protocols.h"

#include <cmath>

#include <gtest/gtest.h>

#include "generators.h"
#include "qsv/adversarial.h"
#include "qsv/error.h"
#include "qsv/hedging.h"
#include "qsv/homogeneous.h"
#include "qsv/numeric.h"

namespace qsv {
namespace {

ProtocolParams Params(int d, int n) {
  ProtocolParams p;
  p.d = d;
  p.n = n;
  return p;
}

ErrorCode CodeOf(Family f, const ProtocolParams& p) {
  try {
    Describe(f, p);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kNumericalFailure;
}

TEST(Describe, Stabilizer) {
  const ProtocolDescriptor q = Describe(Family::kStabilizerQubit, Params(2, 2));
  EXPECT_NEAR(1 - q.nu, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(q.nu, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(q.settings, 3);
  EXPECT_TRUE(q.homogeneous);
  const ProtocolDescriptor d = Describe(Family::kStabilizerQudit, Params(3, 2));
  EXPECT_EQ(d.settings, 4);
  EXPECT_NEAR(1 - d.nu, 0.25, 1e-15);
  EXPECT_NEAR(d.tau, 0.25, 1e-15);
}

TEST(Describe, Others) {
  ProtocolParams dicke = Params(2, 3);
  EXPECT_NEAR(Describe(Family::kDicke, dicke).nu, 1.0 / 3.0, 1e-15);
  dicke.n = 6;
  EXPECT_NEAR(Describe(Family::kDicke, dicke).nu, 0.2, 1e-15);
  EXPECT_FALSE(Describe(Family::kDicke, dicke).homogeneous);
  EXPECT_EQ(Describe(Family::kDicke, dicke).tau, 0.0);
  EXPECT_NEAR(Describe(Family::kMaxEntangled, Params(3, 2)).nu, 0.75, 1e-15);
  EXPECT_NEAR(Describe(Family::kGhz, Params(2, 4)).nu, 2.0 / 3.0, 1e-15);
  ProtocolParams g;
  g.max_degree = 4;
  EXPECT_NEAR(Describe(Family::kHypergraph, g).nu, 0.2, 1e-15);
  EXPECT_EQ(Describe(Family::kHypergraph, g).settings, 5);
}

TEST(Describe, Bipartite) {
  ProtocolParams p;
  p.schmidt = {0.8, 0.6};
  const ProtocolDescriptor d = Describe(Family::kBipartitePure, p);
  EXPECT_NEAR(d.nu, 2.0 / 3.0, 1e-15);
  ASSERT_TRUE(d.adaptive_nu.has_value());
  EXPECT_NEAR(*d.adaptive_nu, 1.0 / 1.48, 1e-15);
  p.adaptive_gap = true;
  EXPECT_NEAR(Describe(Family::kBipartitePure, p).nu, 1.0 / 1.48, 1e-15);
  p.adaptive_gap = false;
  p.schmidt = {std::sqrt(0.5), 0.5, 0.5};
  EXPECT_NEAR(Describe(Family::kBipartitePure, p).nu, 2.0 / 2.75, 1e-12);
}

TEST(Describe, Errors) {
  EXPECT_EQ(CodeOf(Family::kStabilizerQudit, Params(4, 2)), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf(Family::kGhz, Params(2, 2)), ErrorCode::kInvalidParams);
  ProtocolParams p;
  p.schmidt = {0.8, 0.5};
  EXPECT_EQ(CodeOf(Family::kBipartitePure, p), ErrorCode::kNormalizationError);
  p.schmidt = {0.6, 0.8};
  EXPECT_EQ(CodeOf(Family::kBipartitePure, p), ErrorCode::kInvalidParams);
  ProtocolParams d = Params(2, 4);
  d.k = 4;
  EXPECT_EQ(CodeOf(Family::kDicke, d), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf(Family::kHypergraph, ProtocolParams{}), ErrorCode::kInvalidParams);
  EXPECT_THROW(ParseFamily("Cluster"), Error);
  EXPECT_EQ(ParseFamily("GHZ"), Family::kGhz);
}

TEST(Describe, SettingsForEntangledTargets) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_GE(Describe(Family::kStabilizerQubit, Params(2, n)).settings, 2);
    EXPECT_GE(Describe(Family::kStabilizerQudit, Params(5, n)).settings, 2);
  }
  EXPECT_GE(Describe(Family::kMaxEntangled, Params(2, 2)).settings, 2);
  EXPECT_GE(Describe(Family::kDicke, Params(2, 5)).settings, 2);
}

TEST(Describe, QuditCountsFallWithDimension) {
  const PrecisionTarget t(0.01, 0.01);
  for (int n = 2; n <= 5; ++n) {
    std::int64_t prev = INT64_MAX;
    for (int d : {2, 3, 5, 7, 11, 13}) {
      const ProtocolDescriptor desc = Describe(Family::kStabilizerQudit, Params(d, n));
      EXPECT_GE(desc.nu, (d - 1.0) / d - 1e-15);
      const std::int64_t na = Plan(desc, t, false).num_tests_na;
      EXPECT_LE(na, prev);
      prev = na;
    }
  }
}

TEST(Plan, MaxEntangledWithinE) {
  for (int d = 2; d <= 10; ++d) {
    for (double x : {0.1, 0.01, 0.001}) {
      const PrecisionTarget t(x, x);
      const ProtocolPlan p = Plan(Describe(Family::kMaxEntangled, Params(d, 2)), t, true);
      EXPECT_LE(*p.num_tests_adv, CeilGuarded(kE * std::log(1 / x) / x));
      EXPECT_EQ(p.formula, "homogeneous-closed-form");
    }
  }
}

TEST(Plan, QubitStabilizer) {
  const PrecisionTarget t(0.01, 0.001);
  const ProtocolPlan p = Plan(Describe(Family::kStabilizerQubit, Params(2, 5)), t, true);
  const double l = std::log(1 / t.delta) / t.epsilon;
  EXPECT_LE(*p.num_tests_adv, CeilGuarded(2.0 / std::log(2.0) * l));
  EXPECT_LT(*p.num_tests_adv, CeilGuarded(2.89 * l));
  EXPECT_EQ(p.hedge_p, 0.0);
}

TEST(Plan, Hypergraph) {
  ProtocolParams g;
  g.chi = 3;
  for (double x : {0.1, 0.01}) {
    const PrecisionTarget t(x, x);
    const ProtocolPlan p = Plan(Describe(Family::kHypergraph, g), t, true);
    EXPECT_LE(*p.num_tests_adv, (3 + kE - 1) * std::log(1 / (t.fidelity() * x)) / x);
    EXPECT_EQ(p.formula, "hedged-h-bound");
    EXPECT_NEAR(p.hedge_p, 1.0 / (3 * kE), 1e-15);
  }
}

TEST(Plan, HomogeneousMatchesClosedFormAndHull) {
  testing::Gen gen(71);
  for (int i = 0; i < 100; ++i) {
    const PrecisionTarget t(gen.Uniform(0.02, 0.5), gen.Uniform(0.02, 0.5));
    const ProtocolDescriptor desc =
        Describe(Family::kStabilizerQudit, Params(gen.Coin() ? 3 : 5, gen.Int(1, 4)));
    const ProtocolPlan p = Plan(desc, t, true);
    const double lambda = std::max(1 - desc.nu, kInvE);
    ASSERT_EQ(*p.num_tests_adv, MinTestsHomogeneous(t, lambda).num_tests);
    ASSERT_EQ(*p.num_tests_adv, MinTestsAdversarial(*p.strategy, t));
  }
}

TEST(Plan, RandomAdversarialAtLeastNonadversarial) {
  testing::Gen gen(72);
  const Family families[] = {Family::kMaxEntangled, Family::kGhz, Family::kStabilizerQubit,
                             Family::kStabilizerQudit, Family::kHypergraph, Family::kDicke};
  for (int i = 0; i < 1000; ++i) {
    ProtocolParams p = Params(gen.Coin() ? 3 : 5, gen.Int(3, 6));
    p.chi = gen.Int(2, 8);
    p.k = 1;
    const Family f = families[gen.Int(0, 5)];
    const PrecisionTarget t(gen.Uniform(0.001, 0.5), gen.Uniform(0.001, 0.5));
    const ProtocolPlan plan = Plan(Describe(f, p), t, true);
    ASSERT_GE(*plan.num_tests_adv, plan.num_tests_na) << FamilyName(f);
  }
}

TEST(Plan, BoundCountCoversAnySpectrumWithTheGap) {
  testing::Gen gen(73);
  for (int i = 0; i < 60; ++i) {
    ProtocolParams p;
    p.chi = gen.Int(2, 5);
    const ProtocolDescriptor desc = Describe(Family::kWeightedGraph, p);
    std::vector<double> v = {1.0, 1.0 - desc.nu};
    for (int j = gen.Int(0, 2); j > 0; --j) v.push_back(gen.Uniform(0.0, 1.0 - desc.nu));
    const Spectrum s = Spectrum::FromEigenvalues(v);
    const PrecisionTarget t(gen.Uniform(0.1, 0.5), gen.Uniform(0.1, 0.5));
    const ProtocolPlan plan = Plan(desc, t, true);
    ASSERT_LE(MinTestsAdversarial(Hedge(s, plan.hedge_p), t), *plan.num_tests_adv);
  }
}

TEST(Gme, Thresholds) {
  EXPECT_TRUE(CertifyGme(5, 0.36, false).single_test);
  EXPECT_FALSE(CertifyGme(5, 0.35, false).single_test);
  EXPECT_NEAR(CertifyGme(5, 0.5, true).single_test_threshold, 5.0 / 9.0, 1e-15);
  EXPECT_TRUE(CertifyGme(5, 5.0 / 9.0, true).single_test);
  EXPECT_FALSE(CertifyGme(5, 0.55, true).single_test);
  EXPECT_THROW(CertifyGme(4, 0.5, false), Error);
  EXPECT_TRUE(CertifyGme(2, 6.0 / 7.0 + 1e-9, true).single_test);
  EXPECT_FALSE(CertifyGme(2, 6.0 / 7.0 - 1e-6, true).single_test);
}

TEST(Gme, RandomSingleTestRules) {
  testing::Gen gen(74);
  const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int i = 0; i < 1000; ++i) {
    const int d = primes[gen.Int(0, 14)];
    const double delta = gen.Uniform(0.01, 0.99);
    const GmeCertification na = CertifyGme(d, delta, false);
    ASSERT_EQ(na.single_test, na.num_tests == 1);
    if (d >= (1 + std::sqrt(1 - delta)) / delta) ASSERT_TRUE(na.single_test);
    const GmeCertification adv = CertifyGme(d, delta, true);
    // The threshold is sufficient for every d and tight from d = 5 on; for
    // d = 2 one test already works from delta = 6/7.
    if (delta >= adv.single_test_threshold) ASSERT_TRUE(adv.single_test);
    if (d >= 5 && std::abs(delta - adv.single_test_threshold) > 1e-9) {
      ASSERT_EQ(adv.single_test, delta >= adv.single_test_threshold) << d << " " << delta;
    }
    ASSERT_GE(adv.num_tests, na.num_tests);
  }
}

TEST(Table1, FormulaValues) {
  const std::vector<Table1Row> rows = Table1({0.01, 0.01});
  ASSERT_EQ(rows.size(), 9u);
  const std::int64_t na[] = {691, 691, 691, 922, 691, 1382, 1382, 1382, 1382};
  const std::int64_t adv[] = {1252, 1252, 1252, 1329, 1252, 2172, 2172, 1888, 2172};
  for (int i = 0; i < 9; ++i) {
    EXPECT_EQ(rows[i].n_na_formula, na[i]) << rows[i].label;
    EXPECT_EQ(rows[i].n_adv_formula, adv[i]) << rows[i].label;
    EXPECT_LE(rows[i].n_na_exact, rows[i].n_na_formula) << rows[i].label;
    EXPECT_LE(rows[i].n_adv_plan, rows[i].n_adv_formula) << rows[i].label;
    EXPECT_GE(rows[i].n_adv_plan, rows[i].n_na_exact) << rows[i].label;
  }
  EXPECT_EQ(rows[0].n_adv_plan, 1212);
  EXPECT_EQ(rows[3].n_adv_plan, 1307);
  EXPECT_EQ(rows[5].n_adv_plan, 1885);
}

}  // namespace
}  // namespace qsv
