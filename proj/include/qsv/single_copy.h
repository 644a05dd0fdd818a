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

#ifndef QSV_SINGLE_COPY_H_
#define QSV_SINGLE_COPY_H_

#include <optional>
#include <vector>

#include "qsv/target.h"

namespace qsv {

// Minimal pass-and-target probability for one test of {1, lambda}.
double ZetaOneHomogeneous(double delta, double lambda);

struct SingleCopyOptimum {
  double value;
  std::vector<double> lambdas;  // one optimizer, or two at delta = 5/9
};

// Maximum of ZetaOneHomogeneous over lambda in [0, 1).
SingleCopyOptimum MaxZetaOne(double delta);

// Whether some strategy reaches the target with a single test.
bool SingleCopyFeasible(const PrecisionTarget& t);

struct LambdaWindow {
  double lambda_minus;
  double lambda_plus;
};

// Homogeneous lambdas that succeed with one test; requires delta <= 1/2.
std::optional<LambdaWindow> SingleCopyLambdaWindow(const PrecisionTarget& t);

// Minimal pass-and-target probability for one test of a three-level
// strategy with second largest eigenvalue beta and smallest tau.
double ZetaOneGeneral(double delta, double beta, double tau);

// Whether the (beta, tau) strategy succeeds with one test; delta <= 1/2.
bool SingleCopyStrategyFeasible(double beta, double tau, const PrecisionTarget& t);

}  // namespace qsv

#endif  // QSV_SINGLE_COPY_H_
