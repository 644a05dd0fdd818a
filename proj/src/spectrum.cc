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

#include "qsv/spectrum.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "qsv/error.h"

namespace qsv {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingUnitEigenvalue:
      return "MissingUnitEigenvalue";
    case ErrorCode::kDegenerateTop:
      return "DegenerateTop";
    case ErrorCode::kOutOfRange:
      return "OutOfRange";
    case ErrorCode::kNumericalRange:
      return "NumericalRange";
    case ErrorCode::kSizeLimit:
      return "SizeLimit";
    case ErrorCode::kDivByZeroGuard:
      return "DivByZeroGuard";
    case ErrorCode::kSingularSpectrum:
      return "SingularSpectrum";
    case ErrorCode::kSingularHedge:
      return "SingularHedge";
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kNormalizationError:
      return "NormalizationError";
    case ErrorCode::kNumericalFailure:
      return "NumericalFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
      code_(code) {}

Spectrum Spectrum::FromEigenvalues(std::vector<double> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::kOutOfRange, "need at least two eigenvalues");
  }
  for (double& v : values) {
    if (!std::isfinite(v) || v < -kSpectrumTolerance ||
        v > 1.0 + kSpectrumTolerance) {
      std::ostringstream os;
      os << "eigenvalue " << v << " outside [0, 1]";
      throw Error(ErrorCode::kOutOfRange, os.str());
    }
    if (v < 0.0) v = 0.0;
    if (std::abs(v - 1.0) <= kSpectrumTolerance) v = 1.0;
  }
  std::sort(values.begin(), values.end(), std::greater<double>());
  if (values[0] != 1.0) {
    throw Error(ErrorCode::kMissingUnitEigenvalue, "largest eigenvalue is not 1");
  }
  if (values[1] == 1.0) {
    throw Error(ErrorCode::kDegenerateTop, "eigenvalue 1 is degenerate");
  }
  std::vector<double> distinct;
  for (double v : values) {
    if (distinct.empty() || distinct.back() - v > kSpectrumTolerance) {
      distinct.push_back(v);
    }
  }
  return Spectrum(std::move(values), std::move(distinct));
}

Spectrum Spectrum::Homogeneous(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "homogeneous lambda must lie in [0, 1)");
  }
  return FromEigenvalues({1.0, lambda});
}

std::string Spectrum::DebugString() const {
  std::ostringstream os;
  os << "Spectrum[";
  for (size_t i = 0; i < eigenvalues_.size(); ++i) {
    if (i) os << ", ";
    os << eigenvalues_[i];
  }
  os << "]";
  return os.str();
}

}  // namespace qsv
