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

#ifndef QSV_NONADVERSARIAL_H_
#define QSV_NONADVERSARIAL_H_

#include <cstdint>
#include <vector>

#include "qsv/spectrum.h"
#include "qsv/target.h"

namespace qsv {

// Largest pass probability of a state with infidelity at least epsilon.
double MaxPassProbability(const Spectrum& s, double epsilon);

struct NaTestCount {
  std::int64_t exact;         // ceil(ln delta / ln(1 - nu * epsilon))
  std::int64_t simple_upper;  // ceil(ln(1/delta) / (nu * epsilon))
};

// Throws kNumericalRange when nu * epsilon < 1e-12.
NaTestCount NumTestsNonadversarial(double nu, const PrecisionTarget& t);
inline NaTestCount NumTestsNonadversarial(const Spectrum& s,
                                          const PrecisionTarget& t) {
  return NumTestsNonadversarial(s.nu(), t);
}

bool SingleTestSufficientNonadversarial(const Spectrum& s,
                                        const PrecisionTarget& t);

struct FidelityInterval {
  double lower;
  double upper;
};

// Fidelity range compatible with pass probability p; p in [tau, 1].
FidelityInterval FidelityWindow(const Spectrum& s, double pass_probability);

struct FidelityEstimate {
  double fidelity;
  double std_error;
  double std_error_bound;  // 1 / (2 nu sqrt(N))
};

FidelityEstimate FidelityEstimateHomogeneous(double lambda,
                                             double pass_probability,
                                             std::int64_t num_tests);

// Lower bound on the probability that N independently prepared states with
// infidelities eps_j all pass: (1 - nu * mean_eps)^N.
double IndependentPassBound(const Spectrum& s,
                            const std::vector<double>& infidelities);

}  // namespace qsv

#endif  // QSV_NONADVERSARIAL_H_
