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

#ifndef QSV_TARGET_H_
#define QSV_TARGET_H_

#include "qsv/error.h"

namespace qsv {

// Infidelity epsilon and significance delta, both in (0, 1).
struct PrecisionTarget {
  double epsilon;
  double delta;

  PrecisionTarget(double epsilon, double delta) : epsilon(epsilon), delta(delta) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw Error(ErrorCode::kOutOfRange, "epsilon must lie in (0, 1)");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
      throw Error(ErrorCode::kOutOfRange, "delta must lie in (0, 1)");
    }
  }

  double fidelity() const { return 1.0 - epsilon; }
};

}  // namespace qsv

#endif  // QSV_TARGET_H_
