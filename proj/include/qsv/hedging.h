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

#ifndef QSV_HEDGING_H_
#define QSV_HEDGING_H_

#include <cstdint>
#include <optional>

#include "qsv/numeric.h"
#include "qsv/spectrum.h"
#include "qsv/target.h"

namespace qsv {

// Spectrum of (1 - p) Omega + p I.
Spectrum Hedge(const Spectrum& s, double p);

// [min{beta_p ln(1/beta_p), tau_p ln(1/tau_p)}]^-1 for the hedged strategy
// with base gap nu and base smallest eigenvalue tau.
double HedgedHFactor(double p, double nu, double tau);

enum class PStarBranch { kNoHedge, kHomogeneousClosedForm, kBalanceRoot };

struct PStar {
  double p;
  PStarBranch branch;
  double residual;  // tau_p ln tau_p - beta_p ln beta_p at p
  bool side_condition_moved_root = false;
};

// Least p >= 0 with beta_p >= 1/e and tau_p ln(1/tau_p) >= beta_p ln(1/beta_p).
PStar OptimalHedge(double nu, double tau);

double HStar(double nu, double tau);

inline double DefaultHedge(double nu) { return nu * kInvE; }

struct HedgedTestBound {
  double p;
  double h;                 // HedgedHFactor(p, nu, tau)
  double bound;             // h ln(1/(F delta)) / eps; N < bound
  std::optional<double> h_star_bound;  // when p lies in the optimal range
  double default_hedge_bound;   // h(nu/e, nu, 0) ln(1/(F delta)) / eps
  double quadratic_bound;   // ln(1/(F delta)) / ((1 - nu + nu^2/e) nu eps)
  double linear_bound;      // (1 + e nu - nu) ln(1/(F delta)) / (nu eps)
};

// p must equal nu/e or lie in [p*(nu, tau), p*(nu, 0)].
HedgedTestBound HedgedTestsUpper(const Spectrum& s, const PrecisionTarget& t,
                                 double p);
HedgedTestBound HedgedTestsUpper(double nu, double tau, const PrecisionTarget& t,
                                 double p);

struct OverheadRatio {
  double hedged_bound;         // nu h(p, nu, tau) G
  double default_hedge_bound;  // nu h(nu/e, nu) G
  double quadratic_bound;      // G / (1 - nu + nu^2/e)
  double linear_bound;         // (1 + e nu - nu) G
  std::optional<double> measured;  // exact hedged N over nonadversarial N
};

// Bounds on the ratio of adversarial to nonadversarial test counts, where
// G = ln(1/(1 - nu eps)) ln(F delta) / (nu eps ln delta). The measured ratio
// is computed only when `measure_cap` is set.
OverheadRatio OverheadRatioBounds(const Spectrum& s, const PrecisionTarget& t,
                                  double p,
                                  std::optional<std::uint64_t> measure_cap = std::nullopt);

}  // namespace qsv

#endif  // QSV_HEDGING_H_
