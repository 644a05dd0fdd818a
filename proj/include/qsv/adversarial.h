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

#ifndef QSV_ADVERSARIAL_H_
#define QSV_ADVERSARIAL_H_

#include <cstdint>
#include <vector>

#include "qsv/spectrum.h"
#include "qsv/target.h"

namespace qsv {

inline constexpr std::uint64_t kDefaultCompositionCap = 10'000'000;

// Number of compositions of `total` into `parts` nonnegative parts,
// saturating at UINT64_MAX.
std::uint64_t NumCompositions(int total, int parts);

// Walks the compositions of `total` into `parts` nonnegative parts in
// descending lexicographic order, starting at (total, 0, ..., 0).
class CompositionEnumerator {
 public:
  CompositionEnumerator(int total, int parts);

  const std::vector<int>& current() const { return k_; }
  bool done() const { return done_; }
  void Next();

 private:
  std::vector<int> k_;
  bool done_ = false;
};

// All compositions of N + 1 into D parts; throws kSizeLimit above `cap`.
std::vector<std::vector<int>> Compositions(int num_tests, int num_parts,
                                           std::uint64_t cap = kDefaultCompositionCap);

// (pass probability, pass-and-target probability) of the extremal
// permutation-invariant strategy labelled by k, a composition of N + 1 over
// the distinct eigenvalues of s.
struct ExtremalPoint {
  double p;
  double f;
};

ExtremalPoint CompositionPoint(const std::vector<int>& k, const Spectrum& s);

// Pass probability below which no state passes with nonzero fidelity.
double CriticalDelta(int num_tests, const Spectrum& s);

// Lower convex boundary of the extremal points for p >= delta_c. Vertices
// run from (delta_c, 0) to (1, 1) with strictly increasing coordinates and
// strictly increasing f / p.
class Boundary {
 public:
  explicit Boundary(std::vector<ExtremalPoint> vertices);

  const std::vector<ExtremalPoint>& vertices() const { return vertices_; }
  double delta_c() const { return vertices_.front().p; }

  // Minimal pass-and-target probability given pass probability delta.
  double Zeta(double delta) const;
  // Maximal pass probability given pass-and-target probability f.
  double Eta(double f) const;

 private:
  std::vector<ExtremalPoint> vertices_;
};

Boundary ComputeBoundary(int num_tests, const Spectrum& s,
                         std::uint64_t cap = kDefaultCompositionCap);

double Zeta(int num_tests, double delta, const Spectrum& s,
            std::uint64_t cap = kDefaultCompositionCap);
double Eta(int num_tests, double f, const Spectrum& s,
           std::uint64_t cap = kDefaultCompositionCap);

// Worst-case fidelity of the reduced state given pass probability delta.
double FidelityAdversarial(int num_tests, double delta, const Spectrum& s,
                           std::uint64_t cap = kDefaultCompositionCap);
// f / Eta(f).
double FidelityAdversarialByF(int num_tests, double f, const Spectrum& s,
                              std::uint64_t cap = kDefaultCompositionCap);

// Least N with Zeta(N, delta) >= delta (1 - epsilon), by exact boundary
// evaluation.
std::int64_t MinTestsAdversarial(const Spectrum& s, const PrecisionTarget& t,
                                 std::uint64_t cap = kDefaultCompositionCap);

}  // namespace qsv

#endif  // QSV_ADVERSARIAL_H_
