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

#ifndef QSV_GENERAL_BOUNDS_H_
#define QSV_GENERAL_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qsv/spectrum.h"
#include "qsv/target.h"

namespace qsv {

// 1 / min{beta ln(1/beta), tau ln(1/tau)}; throws kSingularSpectrum at tau = 0.
double HFactor(const Spectrum& s);

// Whichever of beta and tau has the smaller x ln(1/x); beta on ties.
double BetaTilde(const Spectrum& s);

struct GapFidelityBound {
  double value;
  double delta_star;  // (1 + N beta) / (N + 1); the bound is tight above it
};

// F >= 1 - (1 - delta) / (N nu delta).
GapFidelityBound FidelityLowerBoundGap(int num_tests, double delta,
                                       const Spectrum& s);

// F >= 1 - 1 / ((N + 1) delta); throws kOutOfRange unless nu >= 1/2.
GapFidelityBound FidelityLowerBoundHalfGap(int num_tests, double delta,
                                           const Spectrum& s);

struct GeneralTestBounds {
  double universal_upper_real;  // (1 - delta) / (nu delta eps)
  std::int64_t universal_upper;
  std::optional<std::int64_t> singular_lower;  // singular spectra
  bool singular_lower_is_upper = false;        // nu >= 1/2
  std::optional<std::int64_t> exact;           // singular and nu >= 1/2
};

GeneralTestBounds TestsBoundsGeneral(const Spectrum& s, const PrecisionTarget& t);

enum class LogArgument { kTauDelta, kF };

// Fidelity lower bound for nonsingular spectra, in terms of ln(tau delta) or
// of ln f where f is the pass-and-target probability.
double FidelityLowerBoundNonsingular(int num_tests, double x, const Spectrum& s,
                                     LogArgument mode);

struct NonsingularTestBounds {
  std::vector<std::int64_t> lower_per_eigenvalue;  // distinct()[1..]
  std::int64_t lower_beta_tilde;
  std::int64_t lower;  // max of the above

  double upper_f_delta_real;    // h F ln(1/(F delta))/eps + ln(F delta)/ln beta - 1
  std::int64_t upper_f_delta;
  double upper_f_delta_strict;  // h ln(1/(F delta)) / eps
  double upper_tau_delta_real;
  std::int64_t upper_tau_delta;
  double upper_tau_delta_strict;
  std::int64_t upper;  // min of the integer upper bounds
};

NonsingularTestBounds TestsBoundsNonsingular(const Spectrum& s,
                                             const PrecisionTarget& t);

}  // namespace qsv

#endif  // QSV_GENERAL_BOUNDS_H_
