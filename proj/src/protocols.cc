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

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsv/error.h"
#include "qsv/hedging.h"
#include "qsv/homogeneous.h"
#include "qsv/nonadversarial.h"
#include "qsv/numeric.h"

namespace qsv {
namespace {

struct FamilyEntry {
  Family family;
  const char* name;
};

constexpr FamilyEntry kFamilies[] = {
    {Family::kMaxEntangled, "MaxEntangled"},
    {Family::kGhz, "GHZ"},
    {Family::kBipartitePure, "BipartitePure"},
    {Family::kStabilizerQubit, "StabilizerQubit"},
    {Family::kStabilizerQudit, "StabilizerQudit"},
    {Family::kHypergraph, "Hypergraph"},
    {Family::kWeightedGraph, "WeightedGraph"},
    {Family::kDicke, "Dicke"},
};

// Every catalogued entangled protocol needs two local settings per party.
constexpr std::int64_t kMinSettings = 2;

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidParams, what);
}

std::int64_t CheckedPow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    Require(r <= (std::numeric_limits<std::int64_t>::max() >> 2) / base,
            "d^n too large");
    r *= base;
  }
  return r;
}

ProtocolDescriptor MakeHomogeneous(Family f, const ProtocolParams& p, double nu,
                                   std::int64_t settings, bool settings_is_minimum,
                                   bool entangled) {
  return {f, p, nu, 1.0 - nu, true, settings, settings_is_minimum, std::nullopt,
          entangled};
}

ProtocolDescriptor MakeGeneric(Family f, const ProtocolParams& p, double nu,
                               std::int64_t settings, bool settings_is_minimum) {
  return {f, p, nu, 0.0, false, settings, settings_is_minimum, std::nullopt, true};
}

}  // namespace

const char* FamilyName(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e.name;
  }
  return "Unknown";
}

Family ParseFamily(const std::string& name) {
  for (const auto& e : kFamilies) {
    if (name == e.name) return e.family;
  }
  throw Error(ErrorCode::kInvalidParams, "unknown protocol family '" + name + "'");
}

bool IsPrime(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t q = 2; q * q <= d; ++q) {
    if (d % q == 0) return false;
  }
  return true;
}

ProtocolDescriptor Describe(Family family, const ProtocolParams& params) {
  const int d = params.d;
  const int n = params.n;
  switch (family) {
    case Family::kMaxEntangled:
      Require(d >= 2, "local dimension must be at least 2");
      return MakeHomogeneous(family, params, d / (d + 1.0), kMinSettings, true, true);
    case Family::kGhz:
      Require(d >= 2, "local dimension must be at least 2");
      Require(n >= 3, "GHZ states need at least 3 parties");
      return MakeHomogeneous(family, params, d / (d + 1.0), kMinSettings, true, true);
    case Family::kBipartitePure: {
      std::vector<double> s = params.schmidt;
      Require(s.size() >= 2, "need at least two Schmidt coefficients");
      double norm = 0.0;
      for (size_t i = 0; i < s.size(); ++i) {
        Require(s[i] >= 0.0, "Schmidt coefficients must be nonnegative");
        Require(i == 0 || s[i] <= s[i - 1] + 1e-12,
                "Schmidt coefficients must be in decreasing order");
        norm += s[i] * s[i];
      }
      if (std::abs(norm - 1.0) > 1e-9) {
        throw Error(ErrorCode::kNormalizationError,
                    "squared Schmidt coefficients must sum to 1");
      }
      const bool entangled = s[1] > 0.0;
      ProtocolDescriptor out = MakeHomogeneous(
          family, params, 2.0 / (2.0 + s[0] * s[0] + s[1] * s[1]),
          entangled ? kMinSettings : 1, true, entangled);
      if (s.size() == 2) out.adaptive_nu = 1.0 / (1.0 + s[0] * s[1]);
      if (params.adaptive_gap) {
        Require(out.adaptive_nu.has_value(), "adaptive gap needs two qubits");
        // Only the gap of the adaptive strategy is known.
        out.nu = *out.adaptive_nu;
        out.tau = 0.0;
        out.homogeneous = false;
      }
      return out;
    }
    case Family::kStabilizerQubit: {
      Require(n >= 1 && n <= 60, "n must lie in [1, 60]");
      const double full = std::ldexp(1.0, n) - 1.0;
      const std::int64_t tests = (std::int64_t{1} << n) - 1;
      return MakeHomogeneous(family, params, std::ldexp(1.0, n - 1) / full, tests,
                             false, n >= 2);
    }
    case Family::kStabilizerQudit: {
      Require(IsPrime(d), "qudit stabilizer protocol needs prime d");
      Require(n >= 1, "n must be positive");
      const std::int64_t dn = CheckedPow(d, n);
      const std::int64_t dn1 = dn / d;
      const double nu = static_cast<double>(dn - dn1) / static_cast<double>(dn - 1);
      return MakeHomogeneous(family, params, nu, (dn - 1) / (d - 1), false, n >= 2);
    }
    case Family::kHypergraph:
    case Family::kWeightedGraph: {
      const int chi = params.chi > 0 ? params.chi : params.max_degree + 1;
      Require(chi >= 2, "chromatic number must be at least 2");
      ProtocolParams p = params;
      p.chi = chi;
      return MakeGeneric(family, p, 1.0 / chi, chi, false);
    }
    case Family::kDicke:
      Require(n >= 3, "Dicke states need at least 3 parties");
      Require(params.k >= 1 && params.k <= n - 1, "k must lie in [1, n - 1]");
      return MakeGeneric(family, params, n == 3 ? 1.0 / 3.0 : 1.0 / (n - 1.0),
                         kMinSettings, true);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown family");
}

ProtocolPlan Plan(const ProtocolDescriptor& desc, const PrecisionTarget& t,
                  bool adversarial) {
  ProtocolPlan out;
  out.num_tests_na = NumTestsNonadversarial(desc.nu, t).exact;
  out.formula = "nonadversarial-log-ratio";
  if (!adversarial) {
    if (desc.homogeneous) out.strategy = Spectrum::Homogeneous(1.0 - desc.nu);
    return out;
  }
  if (desc.homogeneous) {
    const double beta = 1.0 - desc.nu;
    const double lambda = std::max(beta, kInvE);
    out.hedge_p = lambda > beta ? (lambda - beta) / (1.0 - beta) : 0.0;
    out.strategy = Spectrum::Homogeneous(lambda);
    out.num_tests_adv = MinTestsHomogeneous(t, lambda).num_tests;
    out.formula = "homogeneous-closed-form";
    return out;
  }
  out.hedge_p = DefaultHedge(desc.nu);
  // tau is unknown, so use the tau = 0 factor, which dominates every tau.
  const double bound = HedgedHFactor(out.hedge_p, desc.nu, 0.0) *
                       -std::log(t.fidelity() * t.delta) / t.epsilon;
  out.adv_bound = bound;
  out.num_tests_adv = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(bound)) - 1);
  out.formula = "hedged-h-bound";
  return out;
}

GmeCertification CertifyGme(int d, double delta, bool adversarial) {
  Require(IsPrime(d), "GME certification needs prime d");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "delta must lie in (0, 1)");
  }
  const double dd = d;
  GmeCertification out;
  if (!adversarial) {
    const double q = (2.0 * dd - 1.0) / (dd * dd);
    out.single_test_threshold = q;
    out.num_tests = std::max<std::int64_t>(1, CeilGuarded(std::log(delta) / std::log(q)));
    out.single_test = delta >= q - 1e-12;
    return out;
  }
  out.single_test_threshold = 4.0 * dd / ((dd + 1.0) * (dd + 1.0));
  out.num_tests =
      MinTestsHomogeneous(PrecisionTarget((dd - 1.0) / dd, delta), 2.0 / (dd + 1.0))
          .num_tests;
  out.single_test = out.num_tests == 1;
  return out;
}

std::vector<Table1Row> Table1(const PrecisionTarget& t, const Table1Options& opt) {
  const double l = -std::log(t.delta) / t.epsilon;
  const double de = opt.entangled_d, dq = opt.qudit_d, chi = opt.chi;
  const int dn = opt.dicke_n;
  Require(opt.entangled_d >= 2, "entangled_d must be at least 2");
  Require(IsPrime(opt.qudit_d) && opt.qudit_d % 2 == 1, "qudit_d must be an odd prime");
  Require(opt.chi >= 2, "chi must be at least 2");
  Require(dn >= 4, "dicke_n must be at least 4");

  auto row = [&](std::string label, Family f, double nu, bool homogeneous,
                 double na_coeff, std::int64_t adv_formula) {
    ProtocolDescriptor desc{f, {}, nu, homogeneous ? 1.0 - nu : 0.0, homogeneous,
                            kMinSettings, true, std::nullopt, true};
    const ProtocolPlan plan = Plan(desc, t, true);
    return Table1Row{std::move(label), f, nu, homogeneous, CeilGuarded(na_coeff * l),
                     adv_formula, plan.num_tests_na, *plan.num_tests_adv, plan.formula};
  };
  const std::int64_t e_ceil = CeilGuarded(kE * l);
  std::vector<Table1Row> rows;
  rows.push_back(row("Maximally entangled", Family::kMaxEntangled, de / (de + 1.0),
                     true, (de + 1.0) / de, e_ceil));
  rows.push_back(row("Bipartite pure", Family::kBipartitePure, 2.0 / 3.0, true, 1.5,
                     e_ceil));
  rows.push_back(
      row("GHZ", Family::kGhz, de / (de + 1.0), true, (de + 1.0) / de, e_ceil));
  rows.push_back(row("Qubit stabilizer", Family::kStabilizerQubit, 0.5, true, 2.0,
                     CeilGuarded(2.0 / std::log(2.0) * l)));
  rows.push_back(row("Qudit stabilizer", Family::kStabilizerQudit, (dq - 1.0) / dq,
                     true, dq / (dq - 1.0), e_ceil));
  rows.push_back(row("Hypergraph", Family::kHypergraph, 1.0 / chi, false, chi,
                     FloorGuarded((chi + kE - 1.0) * l)));
  rows.push_back(row("Weighted graph", Family::kWeightedGraph, 1.0 / chi, false, chi,
                     FloorGuarded((chi + kE - 1.0) * l)));
  rows.push_back(row("Dicke (n=3)", Family::kDicke, 1.0 / 3.0, false, 3.0,
                     FloorGuarded(4.1 * l)));
  rows.push_back(row("Dicke (n=" + std::to_string(dn) + ")", Family::kDicke,
                     1.0 / (dn - 1.0), false, dn - 1.0, FloorGuarded((dn + kE - 2.0) * l)));
  return rows;
}

}  // namespace qsv
