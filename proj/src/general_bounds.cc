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

#include "qsv/general_bounds.h"

#include <algorithm>
#include <cmath>

#include "qsv/error.h"
#include "qsv/homogeneous.h"
#include "qsv/numeric.h"

namespace qsv {
namespace {

void CheckNonsingular(const Spectrum& s) {
  if (s.is_singular()) {
    throw Error(ErrorCode::kSingularSpectrum, "bound requires tau > 0");
  }
}

std::int64_t LowerFromLambda(double lambda, const PrecisionTarget& t) {
  const std::int64_t k_minus =
      lambda >= kMaxHomogeneousLambda
          ? 0
          : KBracketHomogeneous(t.delta, lambda).k_minus;
  return k_minus + CeilGuarded(k_minus * t.fidelity() / (lambda * t.epsilon));
}

}  // namespace

double HFactor(const Spectrum& s) {
  CheckNonsingular(s);
  return 1.0 / std::min(XLogInvX(s.beta()), XLogInvX(s.tau()));
}

double BetaTilde(const Spectrum& s) {
  return XLogInvX(s.beta()) <= XLogInvX(s.tau()) ? s.beta() : s.tau();
}

GapFidelityBound FidelityLowerBoundGap(int num_tests, double delta,
                                       const Spectrum& s) {
  if (num_tests < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "delta must lie in (0, 1]");
  }
  const double n = num_tests;
  return {1.0 - (1.0 - delta) / (n * s.nu() * delta),
          (1.0 + n * s.beta()) / (n + 1.0)};
}

GapFidelityBound FidelityLowerBoundHalfGap(int num_tests, double delta,
                                           const Spectrum& s) {
  if (s.nu() < 0.5) throw Error(ErrorCode::kOutOfRange, "bound requires nu >= 1/2");
  GapFidelityBound out = FidelityLowerBoundGap(num_tests, delta, s);
  out.value = 1.0 - 1.0 / ((num_tests + 1.0) * delta);
  return out;
}

GeneralTestBounds TestsBoundsGeneral(const Spectrum& s, const PrecisionTarget& t) {
  GeneralTestBounds out;
  const double d = t.delta, e = t.epsilon;
  out.universal_upper_real = (1.0 - d) / (s.nu() * d * e);
  out.universal_upper = std::max<std::int64_t>(1, CeilGuarded(out.universal_upper_real));
  if (s.is_singular()) {
    const std::int64_t alt = CeilGuarded(1.0 / (d * e) - 1.0);
    out.singular_lower = std::max<std::int64_t>(1, std::min(out.universal_upper, alt));
  }
  out.singular_lower_is_upper = s.nu() >= 0.5;
  if (out.singular_lower && out.singular_lower_is_upper) out.exact = out.singular_lower;
  return out;
}

double FidelityLowerBoundNonsingular(int num_tests, double x, const Spectrum& s,
                                     LogArgument mode) {
  CheckNonsingular(s);
  if (num_tests < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  if (!(x > 0.0 && x <= 1.0)) throw Error(ErrorCode::kOutOfRange, "argument must lie in (0, 1]");
  const double log_arg = mode == LogArgument::kTauDelta ? std::log(s.tau() * x)
                                                        : std::log(x);
  const double a = num_tests + 1.0 - log_arg / std::log(s.beta());
  return a / (a - HFactor(s) * log_arg);
}

NonsingularTestBounds TestsBoundsNonsingular(const Spectrum& s,
                                             const PrecisionTarget& t) {
  CheckNonsingular(s);
  NonsingularTestBounds out;
  const std::vector<double>& lam = s.distinct();
  out.lower = 1;
  for (size_t j = 1; j < lam.size(); ++j) {
    out.lower_per_eigenvalue.push_back(LowerFromLambda(lam[j], t));
    out.lower = std::max(out.lower, out.lower_per_eigenvalue.back());
  }
  out.lower_beta_tilde = LowerFromLambda(BetaTilde(s), t);
  out.lower = std::max(out.lower, out.lower_beta_tilde);

  const double h = HFactor(s);
  const double f = t.fidelity();
  const double log_beta = std::log(s.beta());
  auto upper = [&](double log_arg, double* real, std::int64_t* ceiled, double* strict) {
    *real = h * f * -log_arg / t.epsilon + log_arg / log_beta - 1.0;
    *ceiled = std::max<std::int64_t>(1, CeilGuarded(*real));
    *strict = h * -log_arg / t.epsilon;
  };
  upper(std::log(f * t.delta), &out.upper_f_delta_real, &out.upper_f_delta,
        &out.upper_f_delta_strict);
  upper(std::log(s.tau() * t.delta), &out.upper_tau_delta_real, &out.upper_tau_delta,
        &out.upper_tau_delta_strict);
  out.upper = std::min(out.upper_f_delta, out.upper_tau_delta);
  return out;
}

}  // namespace qsv
