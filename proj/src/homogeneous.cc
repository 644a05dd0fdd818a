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

#include "qsv/homogeneous.h"

#include <algorithm>
#include <cmath>

#include "qsv/error.h"
#include "qsv/numeric.h"

namespace qsv {
namespace {

void CheckLambda(double lambda, bool allow_zero) {
  const bool ok = allow_zero ? lambda >= 0.0 : lambda > 0.0;
  if (!ok || !(lambda <= kMaxHomogeneousLambda)) {
    throw Error(ErrorCode::kOutOfRange,
                allow_zero ? "lambda must lie in [0, 1 - 1e-9]"
                           : "lambda must lie in (0, 1 - 1e-9]");
  }
}

void CheckPoint(int num_tests, std::int64_t k) {
  if (num_tests < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  if (k < 0 || k > num_tests + 1) {
    throw Error(ErrorCode::kOutOfRange, "k must lie in [0, N + 1]");
  }
}

// lambda^k with 0^0 = 1.
double IntPow(double lambda, std::int64_t k) {
  return k == 0 ? 1.0 : std::pow(lambda, static_cast<double>(k));
}

}  // namespace

double EtaPointHomogeneous(int num_tests, std::int64_t k, double lambda) {
  CheckPoint(num_tests, k);
  CheckLambda(lambda, true);
  if (k == 0) return 1.0;
  const double n1 = num_tests + 1.0;
  return ((n1 - k) * IntPow(lambda, k) + k * IntPow(lambda, k - 1)) / n1;
}

double ZetaPointHomogeneous(int num_tests, std::int64_t k, double lambda) {
  CheckPoint(num_tests, k);
  CheckLambda(lambda, true);
  const double n1 = num_tests + 1.0;
  return (n1 - k) * IntPow(lambda, k) / n1;
}

double ZetaChordHomogeneous(int num_tests, double delta, double lambda,
                            std::int64_t k) {
  CheckPoint(num_tests, k);
  CheckLambda(lambda, false);
  const double nu = 1.0 - lambda;
  const double n = num_tests;
  return lambda * (delta * (1.0 + (n - k) * nu) - IntPow(lambda, k)) /
         (nu * (k * nu + n * lambda));
}

double ZetaHomogeneous(int num_tests, double delta, double lambda) {
  if (num_tests < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "delta must lie in [0, 1]");
  }
  CheckLambda(lambda, true);
  const double n = num_tests;
  if (lambda == 0.0) return std::max(0.0, ((n + 1.0) * delta - 1.0) / n);
  if (delta <= std::pow(lambda, n)) return 0.0;
  if (delta >= 1.0) return 1.0;
  // Largest k in [0, N] with eta_k >= delta; eta_k decreases in k.
  std::int64_t lo = 0, hi = num_tests;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (EtaPointHomogeneous(num_tests, mid, lambda) >= delta) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return std::max(0.0, ZetaChordHomogeneous(num_tests, delta, lambda, lo));
}

double FidelityHomogeneous(int num_tests, double delta, double lambda) {
  if (delta <= 0.0) throw Error(ErrorCode::kDivByZeroGuard, "delta must be positive");
  return ZetaHomogeneous(num_tests, delta, lambda) / delta;
}

KBracket KBracketHomogeneous(double delta, double lambda) {
  CheckLambda(lambda, false);
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "delta must lie in (0, 1)");
  }
  const double x = std::log(delta) / std::log(lambda);
  const double r = std::round(x);
  if (std::abs(x - r) <= kIntegerGuard) {
    const auto k = static_cast<std::int64_t>(r);
    return {k, k};
  }
  return {static_cast<std::int64_t>(std::floor(x)),
          static_cast<std::int64_t>(std::ceil(x))};
}

double NTilde(double epsilon, double delta, double lambda, std::int64_t k) {
  CheckLambda(lambda, false);
  const double nu = 1.0 - lambda;
  const double f = 1.0 - epsilon;
  return (k * nu * nu * delta * f + IntPow(lambda, k + 1) +
          lambda * delta * (k * nu - 1.0)) /
         (lambda * nu * delta * epsilon);
}

HomogeneousTestCount MinTestsHomogeneous(const PrecisionTarget& t, double lambda) {
  CheckLambda(lambda, true);
  HomogeneousTestCount out{};
  if (lambda == 0.0) {
    out.branch = HomogeneousBranch::kZeroLambda;
    out.num_tests = std::max<std::int64_t>(
        1, CeilGuarded((1.0 - t.delta) / (t.epsilon * t.delta)));
    out.n_tilde_minus = out.n_tilde_plus = (1.0 - t.delta) / (t.epsilon * t.delta);
    out.bracket = {0, 0};
    return out;
  }
  out.bracket = KBracketHomogeneous(t.delta, lambda);
  out.n_tilde_minus = NTilde(t.epsilon, t.delta, lambda, out.bracket.k_minus);
  out.n_tilde_plus = NTilde(t.epsilon, t.delta, lambda, out.bracket.k_plus);
  const bool minus = out.n_tilde_minus <= out.n_tilde_plus;
  out.branch = minus ? HomogeneousBranch::kMinus : HomogeneousBranch::kPlus;
  out.num_tests = std::max<std::int64_t>(
      1, CeilGuarded(minus ? out.n_tilde_minus : out.n_tilde_plus));
  return out;
}

HomogeneousTestBounds TestsBoundsHomogeneous(const PrecisionTarget& t,
                                             double lambda) {
  CheckLambda(lambda, false);
  const KBracket kb = KBracketHomogeneous(t.delta, lambda);
  const double f = t.fidelity();
  const double le = lambda * t.epsilon;
  const double nu = 1.0 - lambda;
  HomogeneousTestBounds out;
  out.lower = kb.k_minus + CeilGuarded(kb.k_minus * f / le);
  out.upper = kb.k_plus + CeilGuarded(kb.k_plus * f / le);
  out.simple_upper_real = std::log(t.delta) / (le * std::log(lambda));
  out.upper_log = CeilGuarded(out.simple_upper_real - nu * kb.k_minus / lambda);
  out.simple_upper_strict = t.delta <= lambda && lambda <= 0.5;
  const double denom = f + le;
  if (lambda * lambda / denom <= t.delta && t.delta <= lambda / denom) {
    out.sqrt_lower =
        2.0 * std::sqrt((1.0 - t.delta) * f) / (t.epsilon * std::sqrt(t.delta));
  }
  return out;
}

HomogeneousAsymptotics AsymptoticsHomogeneous(double lambda,
                                              std::optional<double> epsilon,
                                              std::optional<double> delta) {
  CheckLambda(lambda, false);
  const double log_inv = -std::log(lambda);
  HomogeneousAsymptotics out;
  out.joint_limit = 1.0 / (lambda * log_inv);
  if (epsilon) {
    if (!(*epsilon > 0.0 && *epsilon < 1.0)) {
      throw Error(ErrorCode::kOutOfRange, "epsilon must lie in (0, 1)");
    }
    const double f = 1.0 - *epsilon;
    out.scaled_count = (f + lambda * *epsilon) / (lambda * *epsilon * log_inv);
  }
  if (delta) {
    const KBracket kb = KBracketHomogeneous(*delta, lambda);
    out.small_epsilon_limit =
        kb.k_minus / lambda +
        (IntPow(lambda, kb.k_minus) - *delta) / ((1.0 - lambda) * *delta);
  }
  return out;
}

double OptimalLambda(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "epsilon must lie in [0, 1]");
  }
  if (epsilon == 0.0) return kInvE;
  if (epsilon == 1.0) return 0.0;
  const double f = 1.0 - epsilon;
  auto g = [&](double l) { return f + l * epsilon + f * std::log(l); };
  // g is increasing, negative at F/e and positive at 1/e.
  double lo = f * kInvE, hi = kInvE;
  for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

NormalizedOverhead NormalizedOverheadHomogeneous(double epsilon,
                                                 std::optional<double> lambda) {
  NormalizedOverhead out;
  out.optimal_lambda = OptimalLambda(epsilon);
  const double ls = out.optimal_lambda;
  out.at_optimal = ls > 0.0 ? 1.0 / (kE * ls - std::log(ls) - 1.0) : 0.0;
  if (lambda) {
    CheckLambda(*lambda, false);
    const double f = 1.0 - epsilon;
    out.at_lambda = (f + *lambda * epsilon) /
                    ((kE * f + epsilon) * *lambda * -std::log(*lambda));
  }
  return out;
}

}  // namespace qsv
