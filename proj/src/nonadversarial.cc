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

#include "qsv/nonadversarial.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsv/error.h"
#include "qsv/numeric.h"

namespace qsv {

double MaxPassProbability(const Spectrum& s, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "epsilon must lie in [0, 1]");
  }
  return 1.0 - s.nu() * epsilon;
}

NaTestCount NumTestsNonadversarial(double nu, const PrecisionTarget& t) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "spectral gap must lie in (0, 1]");
  }
  const double x = nu * t.epsilon;
  if (x < 1e-12) {
    throw Error(ErrorCode::kNumericalRange, "nu * epsilon below 1e-12");
  }
  const double log_inv_delta = -std::log(t.delta);
  NaTestCount out;
  out.exact = std::max<std::int64_t>(
      1, CeilGuarded(log_inv_delta / -std::log1p(-x)));
  out.simple_upper = std::max<std::int64_t>(1, CeilGuarded(log_inv_delta / x));
  return out;
}

bool SingleTestSufficientNonadversarial(const Spectrum& s,
                                        const PrecisionTarget& t) {
  return s.nu() * t.epsilon + t.delta >= 1.0 - 1e-12;
}

FidelityInterval FidelityWindow(const Spectrum& s, double pass_probability) {
  const double p = pass_probability;
  if (p < s.tau() - 1e-9 || p > 1.0 + 1e-9) {
    throw Error(ErrorCode::kOutOfRange, "pass probability outside [tau, 1]");
  }
  auto clip = [](double v) { return std::clamp(v, 0.0, 1.0); };
  return {clip(1.0 - (1.0 - p) / s.nu()), clip(1.0 - (1.0 - p) / (1.0 - s.tau()))};
}

FidelityEstimate FidelityEstimateHomogeneous(double lambda,
                                             double pass_probability,
                                             std::int64_t num_tests) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "lambda must lie in [0, 1)");
  }
  if (!(pass_probability >= 0.0 && pass_probability <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "pass probability outside [0, 1]");
  }
  if (num_tests < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  const double nu = 1.0 - lambda;
  const double p = pass_probability;
  const double root_n = std::sqrt(static_cast<double>(num_tests));
  FidelityEstimate out;
  out.fidelity = (p - lambda) / nu;
  out.std_error = std::sqrt(p * (1.0 - p)) / (nu * root_n);
  out.std_error_bound = 1.0 / (2.0 * nu * root_n);
  return out;
}

double IndependentPassBound(const Spectrum& s,
                            const std::vector<double>& infidelities) {
  if (infidelities.empty()) {
    throw Error(ErrorCode::kOutOfRange, "need at least one infidelity");
  }
  for (double e : infidelities) {
    if (!(e >= 0.0 && e <= 1.0)) {
      throw Error(ErrorCode::kOutOfRange, "infidelity outside [0, 1]");
    }
  }
  const double n = static_cast<double>(infidelities.size());
  const double mean =
      std::accumulate(infidelities.begin(), infidelities.end(), 0.0) / n;
  return std::pow(1.0 - s.nu() * mean, n);
}

}  // namespace qsv
