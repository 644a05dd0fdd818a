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

#ifndef QSV_NUMERIC_H_
#define QSV_NUMERIC_H_

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qsv {

inline constexpr double kE = std::numbers::e;
inline constexpr double kInvE = 1.0 / std::numbers::e;

// Slack applied before rounding real-valued test counts to integers.
inline constexpr double kIntegerGuard = 1e-9;

inline std::int64_t CeilGuarded(double x) {
  return static_cast<std::int64_t>(std::ceil(x - kIntegerGuard));
}

inline std::int64_t FloorGuarded(double x) {
  return static_cast<std::int64_t>(std::floor(x + kIntegerGuard));
}

// x * ln(1/x), continuously extended by 0 at x = 0.
inline double XLogInvX(double x) { return x <= 0.0 ? 0.0 : -x * std::log(x); }

}  // namespace qsv

#endif  // QSV_NUMERIC_H_
