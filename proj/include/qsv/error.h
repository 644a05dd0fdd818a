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

#ifndef QSV_ERROR_H_
#define QSV_ERROR_H_

#include <stdexcept>
#include <string>

namespace qsv {

enum class ErrorCode {
  kMissingUnitEigenvalue,
  kDegenerateTop,
  kOutOfRange,
  kNumericalRange,
  kSizeLimit,
  kDivByZeroGuard,
  kSingularSpectrum,
  kSingularHedge,
  kInvalidParams,
  kNormalizationError,
  kNumericalFailure,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qsv

#endif  // QSV_ERROR_H_
