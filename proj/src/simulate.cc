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

#include "qsv/simulate.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "qsv/adversarial.h"
#include "qsv/error.h"
#include "qsv/nonadversarial.h"

namespace qsv {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

void CheckWeights(const std::vector<double>& w, const char* what) {
  double total = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) throw Error(ErrorCode::kNormalizationError, std::string(what) + " has a negative weight");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::kNormalizationError, std::string(what) + " weights must sum to 1");
  }
}

void CheckRun(int num_tests, std::int64_t trials) {
  if (num_tests < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  if (trials < 1) throw Error(ErrorCode::kOutOfRange, "trials must be positive");
}

// Index j with cumulative[j - 1] <= u < cumulative[j].
int Sample(const std::vector<double>& cumulative, double u) {
  for (size_t j = 0; j + 1 < cumulative.size(); ++j) {
    if (u < cumulative[j]) return static_cast<int>(j);
  }
  return static_cast<int>(cumulative.size()) - 1;
}

std::vector<double> Cumulative(const std::vector<double>& w) {
  std::vector<double> c(w.size());
  std::partial_sum(w.begin(), w.end(), c.begin());
  return c;
}

McEstimate Estimate(std::int64_t hits, std::int64_t trials, double expected) {
  const double n = static_cast<double>(trials);
  return {hits / n, expected, std::sqrt(expected * (1.0 - expected) / n)};
}

}  // namespace

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng CounterRng::ForTrial(std::uint64_t seed, std::uint64_t trial) {
  return CounterRng(Mix64(seed ^ Mix64(trial + kGamma)));
}

std::uint64_t CounterRng::Next() { return Mix64(key_ + ++counter_ * kGamma); }

double CounterRng::Uniform() { return (Next() >> 11) * 0x1.0p-53; }

std::uint64_t CounterRng::Below(std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(Next()) * n) >> 64);
}

double McEstimate::ZScore() const {
  if (sigma == 0.0) return estimate == expected ? 0.0 : INFINITY;
  return (estimate - expected) / sigma;
}

IidResult RunIid(const Spectrum& s, const StateModel& m, int num_tests,
                 std::int64_t trials, std::uint64_t seed) {
  CheckRun(num_tests, trials);
  const std::vector<double>& lam = s.distinct();
  if (m.weights.size() != lam.size()) {
    throw Error(ErrorCode::kInvalidParams, "one weight per distinct eigenvalue required");
  }
  CheckWeights(m.weights, "state");
  const std::vector<double> cum = Cumulative(m.weights);
  std::int64_t hits = 0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    CounterRng rng = CounterRng::ForTrial(seed, trial);
    bool all = true;
    for (int i = 0; i < num_tests && all; ++i) {
      all = rng.Bernoulli(lam[Sample(cum, rng.Uniform())]);
    }
    hits += all;
  }
  const double q = std::inner_product(m.weights.begin(), m.weights.end(), lam.begin(), 0.0);
  return {Estimate(hits, trials, std::pow(q, num_tests)), trials, seed, kRngAlgorithm};
}

BlockResult RunBlock(const Spectrum& s, const BlockModel& b, int num_tests,
                     std::int64_t trials, std::uint64_t seed) {
  CheckRun(num_tests, trials);
  if (b.compositions.empty() || b.compositions.size() != b.weights.size()) {
    throw Error(ErrorCode::kInvalidParams, "one weight per composition required");
  }
  CheckWeights(b.weights, "block model");
  const std::vector<double>& lam = s.distinct();
  double expected_p = 0.0, expected_f = 0.0;
  for (size_t i = 0; i < b.compositions.size(); ++i) {
    const auto& k = b.compositions[i];
    if (k.size() != lam.size() ||
        std::accumulate(k.begin(), k.end(), 0) != num_tests + 1) {
      throw Error(ErrorCode::kInvalidParams, "composition must split N + 1 over distinct eigenvalues");
    }
    const ExtremalPoint pt = CompositionPoint(k, s);
    expected_p += b.weights[i] * pt.p;
    expected_f += b.weights[i] * pt.f;
  }
  const std::vector<double> cum = Cumulative(b.weights);
  std::vector<int> slots(num_tests + 1);
  std::int64_t pass = 0, pass_target = 0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    CounterRng rng = CounterRng::ForTrial(seed, trial);
    const auto& k = b.compositions[Sample(cum, rng.Uniform())];
    int pos = 0;
    for (size_t j = 0; j < k.size(); ++j) {
      for (int c = 0; c < k[j]; ++c) slots[pos++] = static_cast<int>(j);
    }
    for (int i = num_tests; i > 0; --i) {
      std::swap(slots[i], slots[rng.Below(i + 1)]);
    }
    bool all = true;
    for (int i = 0; i < num_tests && all; ++i) all = rng.Bernoulli(lam[slots[i]]);
    if (all) {
      ++pass;
      if (slots[num_tests] == 0) ++pass_target;
    }
  }
  return {Estimate(pass, trials, expected_p), Estimate(pass_target, trials, expected_f),
          trials, seed, kRngAlgorithm};
}

EstimatorResult RunEstimator(double lambda, double fidelity, int num_tests,
                             std::int64_t trials, std::uint64_t seed) {
  CheckRun(num_tests, trials);
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "fidelity must lie in [0, 1]");
  }
  const double nu = 1.0 - lambda;
  const double p = lambda + nu * fidelity;
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    CounterRng rng = CounterRng::ForTrial(seed, trial);
    int passes = 0;
    for (int i = 0; i < num_tests; ++i) passes += rng.Bernoulli(p);
    const double f_hat =
        FidelityEstimateHomogeneous(lambda, static_cast<double>(passes) / num_tests, num_tests)
            .fidelity;
    sum += f_hat;
    sum_sq += f_hat * f_hat;
  }
  const double n = static_cast<double>(trials);
  const double mean = sum / n;
  const double var = trials > 1 ? (sum_sq - n * mean * mean) / (n - 1.0) : 0.0;
  const FidelityEstimate analytic = FidelityEstimateHomogeneous(lambda, p, num_tests);
  return {mean, std::sqrt(std::max(0.0, var)), analytic.std_error, analytic.std_error_bound,
          trials, seed, kRngAlgorithm};
}

}  // namespace qsv
