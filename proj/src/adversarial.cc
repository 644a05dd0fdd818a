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

#include "qsv/adversarial.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsv/error.h"
#include "qsv/general_bounds.h"

namespace qsv {
namespace {

constexpr double kCollinearTolerance = 1e-14;

// Cross product of (a - o) and (b - o), normalized by the lengths so the
// collinearity test does not depend on the scale of the points.
bool NotLeftTurn(const ExtremalPoint& o, const ExtremalPoint& a,
                 const ExtremalPoint& b) {
  const double ax = a.p - o.p, ay = a.f - o.f;
  const double bx = b.p - o.p, by = b.f - o.f;
  const double cross = ax * by - ay * bx;
  const double scale = std::hypot(ax, ay) * std::hypot(bx, by);
  return cross <= kCollinearTolerance * scale;
}

void CheckCap(int num_tests, int parts, std::uint64_t cap) {
  if (num_tests < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  const std::uint64_t count = NumCompositions(num_tests + 1, parts);
  if (count > cap) {
    throw Error(ErrorCode::kSizeLimit,
                "composition count " + std::to_string(count) + " exceeds cap " +
                    std::to_string(cap));
  }
}

// Evaluates points with shared log tables for one spectrum.
class PointEvaluator {
 public:
  explicit PointEvaluator(const Spectrum& s) : lambda_(s.distinct()) {
    log_lambda_.reserve(lambda_.size());
    for (double l : lambda_) {
      log_lambda_.push_back(l > 0.0 ? std::log(l)
                                    : -std::numeric_limits<double>::infinity());
    }
  }

  ExtremalPoint operator()(const std::vector<int>& k) const {
    if (k.size() != lambda_.size()) {
      throw Error(ErrorCode::kInvalidParams,
                  "composition length differs from distinct eigenvalue count");
    }
    long total = 0;
    int zero_slot = -1;
    double log_prod = 0.0;
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] < 0) throw Error(ErrorCode::kInvalidParams, "negative part");
      total += k[i];
      if (k[i] == 0) continue;
      if (lambda_[i] == 0.0) {
        zero_slot = static_cast<int>(i);
      } else {
        log_prod += k[i] * log_lambda_[i];
      }
    }
    const double n1 = static_cast<double>(total);
    if (zero_slot >= 0) {
      // Every product containing a positive power of 0 vanishes; only the term
      // that lowers the zero exponent to 0 can survive.
      if (k[zero_slot] >= 2) return {0.0, 0.0};
      return {std::exp(log_prod) / n1, 0.0};
    }
    double eta = 0.0;
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] > 0) eta += k[i] * std::exp(log_prod - log_lambda_[i]);
    }
    return {eta / n1, k[0] * std::exp(log_prod) / n1};
  }

 private:
  std::vector<double> lambda_;
  std::vector<double> log_lambda_;
};

}  // namespace

std::uint64_t NumCompositions(int total, int parts) {
  if (total < 0 || parts < 1) return 0;
  // C(total + parts - 1, parts - 1), built incrementally so every partial
  // product is itself a binomial coefficient.
  const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (int j = 1; j < parts; ++j) {
    const std::uint64_t num = static_cast<std::uint64_t>(total) + j;
    if (c > kMax / num) return kMax;
    c = c * num / j;
  }
  return c;
}

CompositionEnumerator::CompositionEnumerator(int total, int parts)
    : k_(std::max(parts, 0), 0) {
  if (total < 0 || parts < 1) {
    throw Error(ErrorCode::kOutOfRange, "invalid composition shape");
  }
  k_[0] = total;
}

void CompositionEnumerator::Next() {
  if (done_) return;
  const int d = static_cast<int>(k_.size());
  int i = d - 2;
  while (i >= 0 && k_[i] == 0) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  int tail = 0;
  for (int j = i + 1; j < d; ++j) {
    tail += k_[j];
    k_[j] = 0;
  }
  --k_[i];
  k_[i + 1] = tail + 1;
}

std::vector<std::vector<int>> Compositions(int num_tests, int num_parts,
                                           std::uint64_t cap) {
  CheckCap(num_tests, num_parts, cap);
  std::vector<std::vector<int>> out;
  out.reserve(NumCompositions(num_tests + 1, num_parts));
  for (CompositionEnumerator e(num_tests + 1, num_parts); !e.done(); e.Next()) {
    out.push_back(e.current());
  }
  return out;
}

ExtremalPoint CompositionPoint(const std::vector<int>& k, const Spectrum& s) {
  return PointEvaluator(s)(k);
}

double CriticalDelta(int num_tests, const Spectrum& s) {
  if (num_tests < 1) throw Error(ErrorCode::kOutOfRange, "N must be positive");
  const double b = std::pow(s.beta(), num_tests);
  if (!s.is_singular()) return b;
  return std::max(b, 1.0 / (num_tests + 1.0));
}

Boundary::Boundary(std::vector<ExtremalPoint> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw Error(ErrorCode::kNumericalFailure, "boundary needs two vertices");
  }
}

double Boundary::Zeta(double delta) const {
  if (delta <= vertices_.front().p) return 0.0;
  if (delta >= 1.0) return 1.0;
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), delta,
      [](const ExtremalPoint& v, double x) { return v.p < x; });
  const ExtremalPoint& hi = *it;
  const ExtremalPoint& lo = *(it - 1);
  return lo.f + (hi.f - lo.f) * (delta - lo.p) / (hi.p - lo.p);
}

double Boundary::Eta(double f) const {
  if (f <= 0.0) return vertices_.front().p;
  if (f >= 1.0) return 1.0;
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), f,
      [](const ExtremalPoint& v, double x) { return v.f < x; });
  const ExtremalPoint& hi = *it;
  const ExtremalPoint& lo = *(it - 1);
  return lo.p + (hi.p - lo.p) * (f - lo.f) / (hi.f - lo.f);
}

Boundary ComputeBoundary(int num_tests, const Spectrum& s, std::uint64_t cap) {
  const int d = s.num_distinct();
  CheckCap(num_tests, d, cap);
  const PointEvaluator point(s);

  // Points with f = 0 only matter through the rightmost one.
  std::vector<ExtremalPoint> pts;
  pts.reserve(NumCompositions(num_tests + 1, d));
  ExtremalPoint zero_anchor{-1.0, 0.0};
  for (CompositionEnumerator e(num_tests + 1, d); !e.done(); e.Next()) {
    const ExtremalPoint v = point(e.current());
    if (v.f == 0.0) {
      zero_anchor.p = std::max(zero_anchor.p, v.p);
    } else {
      pts.push_back(v);
    }
  }
  pts.push_back(zero_anchor);
  std::sort(pts.begin(), pts.end(), [](const ExtremalPoint& a, const ExtremalPoint& b) {
    return a.p < b.p || (a.p == b.p && a.f < b.f);
  });
  // Anything left of the zero anchor lies above the line f = 0 and cannot be
  // on the lower boundary to its right.
  auto start = std::find_if(pts.begin(), pts.end(), [&](const ExtremalPoint& v) {
    return v.p == zero_anchor.p && v.f == 0.0;
  });

  std::vector<ExtremalPoint> hull;
  for (auto it = start; it != pts.end(); ++it) {
    while (hull.size() >= 2 &&
           NotLeftTurn(hull[hull.size() - 2], hull.back(), *it)) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  return Boundary(std::move(hull));
}

double Zeta(int num_tests, double delta, const Spectrum& s, std::uint64_t cap) {
  return ComputeBoundary(num_tests, s, cap).Zeta(delta);
}

double Eta(int num_tests, double f, const Spectrum& s, std::uint64_t cap) {
  return ComputeBoundary(num_tests, s, cap).Eta(f);
}

double FidelityAdversarial(int num_tests, double delta, const Spectrum& s,
                           std::uint64_t cap) {
  if (delta <= 0.0) throw Error(ErrorCode::kDivByZeroGuard, "delta must be positive");
  return Zeta(num_tests, delta, s, cap) / delta;
}

double FidelityAdversarialByF(int num_tests, double f, const Spectrum& s,
                              std::uint64_t cap) {
  const double eta = Eta(num_tests, f, s, cap);
  if (eta <= 0.0) throw Error(ErrorCode::kDivByZeroGuard, "eta vanished");
  return f / eta;
}

std::int64_t MinTestsAdversarial(const Spectrum& s, const PrecisionTarget& t,
                                 std::uint64_t cap) {
  const double target = t.delta * t.fidelity();
  auto sufficient = [&](std::int64_t n) {
    return ComputeBoundary(static_cast<int>(n), s, cap).Zeta(t.delta) >=
           target - 1e-12;
  };
  std::int64_t upper = TestsBoundsGeneral(s, t).universal_upper;
  if (!s.is_singular()) {
    upper = std::min(upper, TestsBoundsNonsingular(s, t).upper);
  }
  upper = std::max<std::int64_t>(upper, 1);
  if (upper > std::numeric_limits<int>::max() / 2) {
    throw Error(ErrorCode::kSizeLimit, "test count exceeds supported range");
  }

  if (sufficient(1)) return 1;
  std::int64_t lo = 1, hi = 2;
  while (hi < upper && !sufficient(hi)) {
    lo = hi;
    hi *= 2;
  }
  if (hi >= upper) {
    hi = upper;
    if (!sufficient(hi)) {
      throw Error(ErrorCode::kNumericalFailure,
                  "analytic upper bound not sufficient on boundary");
    }
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (sufficient(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace qsv
