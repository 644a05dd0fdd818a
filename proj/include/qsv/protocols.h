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

#ifndef QSV_PROTOCOLS_H_
#define QSV_PROTOCOLS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsv/spectrum.h"
#include "qsv/target.h"

namespace qsv {

enum class Family {
  kMaxEntangled,
  kGhz,
  kBipartitePure,
  kStabilizerQubit,
  kStabilizerQudit,
  kHypergraph,
  kWeightedGraph,
  kDicke,
};

const char* FamilyName(Family f);
// Accepts the names produced by FamilyName; throws kInvalidParams otherwise.
Family ParseFamily(const std::string& name);

struct ProtocolParams {
  int d = 2;
  int n = 2;
  std::vector<double> schmidt;
  int chi = 0;         // chromatic number
  int max_degree = 0;  // used as chi = max_degree + 1 when chi is 0
  int k = 1;           // Dicke excitations
  bool adaptive_gap = false;  // two-qubit bipartite: use 1/(1 + s0 s1)
};

struct ProtocolDescriptor {
  Family family;
  ProtocolParams params;
  double nu;
  double tau;  // 1 - nu for homogeneous families, 0 when unknown
  bool homogeneous;
  std::int64_t settings;
  bool settings_is_minimum;  // count is the two-setting floor, not a catalog value
  std::optional<double> adaptive_nu;  // two-qubit bipartite only
  bool entangled;
};

ProtocolDescriptor Describe(Family family, const ProtocolParams& params);

struct ProtocolPlan {
  std::int64_t num_tests_na;
  std::optional<std::int64_t> num_tests_adv;
  std::optional<Spectrum> strategy;  // hedged spectrum when known
  double hedge_p = 0.0;
  std::optional<double> adv_bound;   // real-valued strict bound for bound-based counts
  std::string formula;
};

ProtocolPlan Plan(const ProtocolDescriptor& desc, const PrecisionTarget& t,
                  bool adversarial);

struct GmeCertification {
  std::int64_t num_tests;
  bool single_test;
  double single_test_threshold;
};

// Tests needed to certify genuine multipartite entanglement of a qudit graph
// state (fidelity above 1/d) at significance delta.
GmeCertification CertifyGme(int d, double delta, bool adversarial);

struct Table1Options {
  int entangled_d = 2;  // maximally entangled and GHZ rows
  int qudit_d = 3;
  int chi = 3;
  int dicke_n = 4;
};

struct Table1Row {
  std::string label;
  Family family;
  double nu;
  bool homogeneous;
  std::int64_t n_na_formula;
  std::int64_t n_adv_formula;
  std::int64_t n_na_exact;
  std::int64_t n_adv_plan;
  std::string adv_plan_formula;
};

std::vector<Table1Row> Table1(const PrecisionTarget& t, const Table1Options& opt = {});

bool IsPrime(std::int64_t d);

}  // namespace qsv

#endif  // QSV_PROTOCOLS_H_
