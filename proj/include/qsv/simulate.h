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

#ifndef QSV_SIMULATE_H_
#define QSV_SIMULATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qsv/spectrum.h"

namespace qsv {

inline constexpr const char* kRngAlgorithm = "splitmix64-counter";

// Counter-based generator: output i is the SplitMix64 finalizer applied to
// key + (i + 1) * golden_gamma, so any stream position is addressable.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  // Independent stream for one trial of a run seeded with `seed`.
  static CounterRng ForTrial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t Next();
  double Uniform();                      // [0, 1)
  std::uint64_t Below(std::uint64_t n);  // [0, n)
  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t Mix64(std::uint64_t z);

// Diagonal state: probability x_j on the eigenspace of distinct()[j].
struct StateModel {
  std::vector<double> weights;
};

// Mixture over compositions k of N + 1 (extremal permutation-invariant
// strategies) with weights c_k.
struct BlockModel {
  std::vector<std::vector<int>> compositions;
  std::vector<double> weights;
};

struct McEstimate {
  double estimate;
  double expected;
  double sigma;  // binomial standard error at the expected value

  double ZScore() const;
};

struct IidResult {
  McEstimate pass;
  std::int64_t trials;
  std::uint64_t seed;
  std::string rng;
};

IidResult RunIid(const Spectrum& s, const StateModel& m, int num_tests,
                 std::int64_t trials, std::uint64_t seed);

struct BlockResult {
  McEstimate pass;
  McEstimate pass_and_target;
  std::int64_t trials;
  std::uint64_t seed;
  std::string rng;
};

BlockResult RunBlock(const Spectrum& s, const BlockModel& b, int num_tests,
                     std::int64_t trials, std::uint64_t seed);

struct EstimatorResult {
  double mean_fidelity;
  double std_fidelity;   // sample standard deviation of the estimates
  double predicted_std;  // sqrt(p (1 - p)) / (nu sqrt(N))
  double std_bound;      // 1 / (2 nu sqrt(N))
  std::int64_t trials;
  std::uint64_t seed;
  std::string rng;
};

// Fidelity estimation with a homogeneous strategy on states of fidelity F.
EstimatorResult RunEstimator(double lambda, double fidelity, int num_tests,
                             std::int64_t trials, std::uint64_t seed);

}  // namespace qsv

#endif  // QSV_SIMULATE_H_
