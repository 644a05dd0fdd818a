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

#ifndef QSV_HOMOGENEOUS_H_
#define QSV_HOMOGENEOUS_H_

#include <cstdint>
#include <optional>

#include "qsv/target.h"

namespace qsv {

// Largest lambda accepted by the closed forms below.
inline constexpr double kMaxHomogeneousLambda = 1.0 - 1e-9;

// Extremal points of the strategy {1, lambda}, k = 0..N+1.
double EtaPointHomogeneous(int num_tests, std::int64_t k, double lambda);
double ZetaPointHomogeneous(int num_tests, std::int64_t k, double lambda);

// Value of the chord through points k and k + 1 at pass probability delta.
double ZetaChordHomogeneous(int num_tests, double delta, double lambda,
                            std::int64_t k);

// Closed-form minimal pass-and-target probability.
double ZetaHomogeneous(int num_tests, double delta, double lambda);
double FidelityHomogeneous(int num_tests, double delta, double lambda);

struct KBracket {
  std::int64_t k_minus;  // floor(log_lambda delta)
  std::int64_t k_plus;   // ceil(log_lambda delta)
};

// Both entries coincide when log_lambda delta is within 1e-9 of an integer.
KBracket KBracketHomogeneous(double delta, double lambda);

double NTilde(double epsilon, double delta, double lambda, std::int64_t k);

enum class HomogeneousBranch { kZeroLambda, kMinus, kPlus };

struct HomogeneousTestCount {
  std::int64_t num_tests;
  HomogeneousBranch branch;
  KBracket bracket;  // zeros when lambda == 0
  double n_tilde_minus;
  double n_tilde_plus;
};

HomogeneousTestCount MinTestsHomogeneous(const PrecisionTarget& t, double lambda);

struct HomogeneousTestBounds {
  std::int64_t lower;         // k- + ceil(k- F / (lambda epsilon))
  std::int64_t upper;         // k+ + ceil(k+ F / (lambda epsilon))
  std::int64_t upper_log;     // ceil(ln delta / (lambda epsilon ln lambda) - nu k- / lambda)
  double simple_upper_real;   // ln delta / (lambda epsilon ln lambda)
  bool simple_upper_strict;   // delta <= lambda <= 1/2
  std::optional<double> sqrt_lower;  // when lambda^2/(F + lambda eps) <= delta <= lambda/(F + lambda eps)
};

HomogeneousTestBounds TestsBoundsHomogeneous(const PrecisionTarget& t,
                                             double lambda);

struct HomogeneousAsymptotics {
  std::optional<double> scaled_count;        // (F + lambda eps)/(lambda eps ln(1/lambda))
  std::optional<double> small_epsilon_limit; // k-/lambda + (lambda^k- - delta)/(nu delta)
  double joint_limit;                        // 1/(lambda ln(1/lambda))
};

HomogeneousAsymptotics AsymptoticsHomogeneous(double lambda,
                                              std::optional<double> epsilon,
                                              std::optional<double> delta);

// Root in (0, 1/e] of F + lambda eps + F ln lambda = 0.
double OptimalLambda(double epsilon);

struct NormalizedOverhead {
  std::optional<double> at_lambda;  // when lambda is supplied
  double optimal_lambda;
  double at_optimal;                // 1/(e lambda* - ln lambda* - 1)
};

NormalizedOverhead NormalizedOverheadHomogeneous(double epsilon,
                                                 std::optional<double> lambda);

}  // namespace qsv

#endif  // QSV_HOMOGENEOUS_H_
