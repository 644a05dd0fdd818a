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

#include "qsv/hedging.h"

#include <algorithm>
#include <cmath>

#include "qsv/adversarial.h"
#include "qsv/error.h"
#include "qsv/nonadversarial.h"

namespace qsv {
namespace {

constexpr double kTol = 1e-12;

void CheckGapAndTau(double nu, double tau) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "nu must lie in (0, 1]");
  }
  if (!(tau >= 0.0 && tau <= 1.0 - nu + kTol)) {
    throw Error(ErrorCode::kOutOfRange, "tau must lie in [0, 1 - nu]");
  }
}

void CheckP(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw Error(ErrorCode::kOutOfRange, "p must lie in [0, 1)");
}

// beta_p ln(1/beta_p) with beta_p = 1 - (1 - p) nu, using log1p near 1.
double BetaTerm(double p, double nu) {
  const double x = (1.0 - p) * nu;
  const double beta_p = 1.0 - x;
  if (beta_p <= 0.0) return 0.0;
  return -beta_p * std::log1p(-x);
}

double TauTerm(double p, double tau) { return XLogInvX((1.0 - p) * tau + p); }

}  // namespace

Spectrum Hedge(const Spectrum& s, double p) {
  CheckP(p);
  std::vector<double> values = s.eigenvalues();
  for (double& v : values) v = (1.0 - p) * v + p;
  return Spectrum::FromEigenvalues(std::move(values));
}

double HedgedHFactor(double p, double nu, double tau) {
  CheckGapAndTau(nu, tau);
  CheckP(p);
  if ((1.0 - p) * tau + p == 0.0) {
    throw Error(ErrorCode::kSingularHedge, "hedged strategy is singular");
  }
  return 1.0 / std::min(BetaTerm(p, nu), TauTerm(p, tau));
}

PStar OptimalHedge(double nu, double tau) {
  CheckGapAndTau(nu, tau);
  const double beta = 1.0 - nu;
  auto balance = [&](double p) { return TauTerm(p, tau) - BetaTerm(p, nu); };
  PStar out{};
  if (std::abs(tau - beta) <= kTol) {
    out.branch = PStarBranch::kHomogeneousClosedForm;
    out.p = nu <= 1.0 - kInvE + kTol ? 0.0 : (kE * nu - kE + 1.0) / (kE * nu);
    out.residual = balance(out.p);
    return out;
  }
  if (XLogInvX(tau) >= XLogInvX(beta) && beta >= kInvE) {
    out.branch = PStarBranch::kNoHedge;
    out.p = 0.0;
    out.residual = balance(0.0);
    return out;
  }
  out.branch = PStarBranch::kBalanceRoot;
  double lo = 0.0, hi = kInvE;
  if (!(balance(lo) < 0.0 && balance(hi) >= 0.0)) {
    throw Error(ErrorCode::kNumericalFailure, "balance equation has no sign change");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (balance(mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.p = hi;
  // The root sits where tau_p and beta_p straddle 1/e, so this never binds in
  // exact arithmetic; it is kept to honour the definition.
  const double p_side = (kInvE - beta) / nu;
  if (p_side > out.p + kTol) {
    out.p = p_side;
    out.side_condition_moved_root = true;
  }
  out.residual = balance(out.p);
  return out;
}

double HStar(double nu, double tau) {
  return HedgedHFactor(OptimalHedge(nu, tau).p, nu, tau);
}

HedgedTestBound HedgedTestsUpper(double nu, double tau, const PrecisionTarget& t,
                                 double p) {
  CheckGapAndTau(nu, tau);
  const double p_default = DefaultHedge(nu);
  const double p_lo = OptimalHedge(nu, tau).p;
  const double p_hi = OptimalHedge(nu, 0.0).p;
  const bool in_range = p >= p_lo - kTol && p <= p_hi + kTol;
  if (std::abs(p - p_default) > kTol && !in_range) {
    throw Error(ErrorCode::kOutOfRange,
                "p must be nu/e or lie between the optimal hedges for tau and 0");
  }
  const double log_term = -std::log(t.fidelity() * t.delta);
  const double e = t.epsilon;
  HedgedTestBound out;
  out.p = p;
  out.h = HedgedHFactor(p, nu, tau);
  out.bound = out.h * log_term / e;
  if (in_range) out.h_star_bound = HStar(nu, 0.0) * log_term / e;
  out.default_hedge_bound = HedgedHFactor(p_default, nu, 0.0) * log_term / e;
  out.quadratic_bound = log_term / ((1.0 - nu + kInvE * nu * nu) * nu * e);
  out.linear_bound = (1.0 + kE * nu - nu) * log_term / (nu * e);
  return out;
}

HedgedTestBound HedgedTestsUpper(const Spectrum& s, const PrecisionTarget& t,
                                 double p) {
  return HedgedTestsUpper(s.nu(), s.tau(), t, p);
}

OverheadRatio OverheadRatioBounds(const Spectrum& s, const PrecisionTarget& t,
                                  double p, std::optional<std::uint64_t> measure_cap) {
  const double nu = s.nu();
  const double e = t.epsilon;
  const double g = -std::log1p(-nu * e) * std::log(t.fidelity() * t.delta) /
                   (nu * e * std::log(t.delta));
  OverheadRatio out;
  out.hedged_bound = nu * HedgedHFactor(p, nu, s.tau()) * g;
  out.default_hedge_bound = nu * HedgedHFactor(DefaultHedge(nu), nu, 0.0) * g;
  out.quadratic_bound = g / (1.0 - nu + kInvE * nu * nu);
  out.linear_bound = (1.0 + kE * nu - nu) * g;
  if (measure_cap) {
    const double n_adv =
        static_cast<double>(MinTestsAdversarial(Hedge(s, p), t, *measure_cap));
    const double n_na = static_cast<double>(NumTestsNonadversarial(s, t).exact);
    out.measured = n_adv / n_na;
  }
  return out;
}

}  // namespace qsv
