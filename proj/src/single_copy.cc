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

#include "qsv/single_copy.h"

#include <algorithm>
#include <cmath>

#include "qsv/error.h"

namespace qsv {
namespace {

constexpr double kLandmarkDelta = 5.0 / 9.0;
constexpr double kTol = 1e-12;

void CheckDelta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "delta must lie in [0, 1]");
  }
}

}  // namespace

double ZetaOneHomogeneous(double delta, double lambda) {
  CheckDelta(delta);
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "lambda must lie in [0, 1)");
  }
  const double nu = 1.0 - lambda;
  return std::max({0.0, lambda * (delta - lambda) / nu,
                   (delta * (2.0 - lambda) - 1.0) / nu});
}

SingleCopyOptimum MaxZetaOne(double delta) {
  CheckDelta(delta);
  const double root = std::sqrt(1.0 - delta);
  SingleCopyOptimum out;
  out.value = std::max(2.0 - 2.0 * root - delta, 2.0 * delta - 1.0);
  if (std::abs(delta - kLandmarkDelta) <= kTol) {
    out.lambdas = {0.0, 1.0 - root};
  } else if (delta < kLandmarkDelta) {
    out.lambdas = {1.0 - root};
  } else {
    out.lambdas = {0.0};
  }
  return out;
}

bool SingleCopyFeasible(const PrecisionTarget& t) {
  const double e = t.epsilon;
  const double threshold =
      std::min(4.0 * (1.0 - e) / ((2.0 - e) * (2.0 - e)), 1.0 / (1.0 + e));
  return t.delta >= threshold - kTol;
}

std::optional<LambdaWindow> SingleCopyLambdaWindow(const PrecisionTarget& t) {
  if (t.delta > 0.5) {
    throw Error(ErrorCode::kOutOfRange, "lambda window requires delta <= 1/2");
  }
  const double e = t.epsilon;
  const double d = t.delta;
  if (d < 4.0 * (1.0 - e) / ((2.0 - e) * (2.0 - e)) - kTol) return std::nullopt;
  const double b = (2.0 - e) * d;
  const double disc = std::max(0.0, b * b - 4.0 * (1.0 - e) * d);
  const double r = std::sqrt(disc);
  return LambdaWindow{(b - r) / 2.0, (b + r) / 2.0};
}

double ZetaOneGeneral(double delta, double beta, double tau) {
  CheckDelta(delta);
  if (!(beta >= 0.0 && beta < 1.0) || !(tau >= 0.0)) {
    throw Error(ErrorCode::kOutOfRange, "beta must lie in [0, 1), tau >= 0");
  }
  if (tau > beta) throw Error(ErrorCode::kOutOfRange, "tau exceeds beta");
  if (beta >= 0.5) return ZetaOneHomogeneous(delta, beta);
  if (delta <= beta) return 0.0;
  if (delta <= (1.0 + tau) / 2.0) return tau * (delta - beta) / (1.0 + tau - 2.0 * beta);
  if (delta <= (1.0 + beta) / 2.0) return delta - 0.5;
  return (delta * (2.0 - beta) - 1.0) / (1.0 - beta);
}

bool SingleCopyStrategyFeasible(double beta, double tau, const PrecisionTarget& t) {
  if (t.delta > 0.5) {
    throw Error(ErrorCode::kOutOfRange, "strategy test requires delta <= 1/2");
  }
  if (tau > beta) throw Error(ErrorCode::kOutOfRange, "tau exceeds beta");
  if (!(beta > 0.0 && beta < t.delta)) return false;
  return tau * (t.delta - beta) / (1.0 + tau - 2.0 * beta) >=
         t.delta * t.fidelity() - kTol;
}

}  // namespace qsv
