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

#ifndef QSV_SPECTRUM_H_
#define QSV_SPECTRUM_H_

#include <string>
#include <vector>

namespace qsv {

inline constexpr double kSpectrumTolerance = 1e-12;

// Spectrum of a verification operator: eigenvalues in [0, 1] with a
// nondegenerate top eigenvalue equal to 1.
class Spectrum {
 public:
  // Sorts, snaps values within tolerance of 0 or 1, and validates.
  static Spectrum FromEigenvalues(std::vector<double> values);

  // The two-level spectrum {1, lambda}, lambda in [0, 1).
  static Spectrum Homogeneous(double lambda);

  // Eigenvalues in descending order, with multiplicity.
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  // Distinct eigenvalues in descending order; distinct()[0] == 1.
  const std::vector<double>& distinct() const { return distinct_; }

  int num_distinct() const { return static_cast<int>(distinct_.size()); }
  double beta() const { return distinct_[1]; }
  double tau() const { return distinct_.back(); }
  double nu() const { return 1.0 - beta(); }
  bool is_singular() const { return tau() == 0.0; }
  bool is_homogeneous() const { return distinct_.size() == 2; }

  std::string DebugString() const;

 private:
  Spectrum(std::vector<double> eigenvalues, std::vector<double> distinct)
      : eigenvalues_(std::move(eigenvalues)), distinct_(std::move(distinct)) {}

  std::vector<double> eigenvalues_;
  std::vector<double> distinct_;
};

}  // namespace qsv

#endif  // QSV_SPECTRUM_H_
