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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qsv/adversarial.h"
#include "qsv/error.h"
#include "qsv/general_bounds.h"
#include "qsv/hedging.h"
#include "qsv/homogeneous.h"
#include "qsv/nonadversarial.h"
#include "qsv/numeric.h"
#include "qsv/protocols.h"
#include "qsv/simulate.h"
#include "qsv/single_copy.h"
#include "report.h"

namespace qsv::cli {
namespace {

// Malformed flags or input documents.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string epsilon, delta, num_tests;
  bool adversarial = false;
  std::string hedge = "auto";
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultCompositionCap;
  std::int64_t trials = 100000;
  std::string param, range;
  std::string beta, tau, lambda, fidelity;
  Table1Options table;
};

int IntFrom(const std::string& text, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError(std::string("invalid integer for ") + what + ": '" + text + "'");
  }
  return v;
}

double NumFrom(const Json& v, const char* what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return ParseNumber(v.get<std::string>());
  throw UsageError(std::string("expected a number for ") + what);
}

Json LoadInput(const Options& o, std::istream& in) {
  if (o.input.empty()) throw UsageError("input JSON required (file path, '-' or inline)");
  try {
    if (o.input == "-") return Json::parse(in);
    if (o.input.front() == '{') return Json::parse(o.input);
    std::ifstream f(o.input);
    if (!f) throw UsageError("cannot open input file '" + o.input + "'");
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

Spectrum ParseStrategy(const Json& j) {
  if (j.contains("eigenvalues")) {
    const Json& e = j.at("eigenvalues");
    if (!e.is_array()) throw UsageError("'eigenvalues' must be an array");
    std::vector<double> v;
    for (const Json& x : e) v.push_back(NumFrom(x, "eigenvalue"));
    return Spectrum::FromEigenvalues(std::move(v));
  }
  if (j.contains("homogeneous")) {
    const Json& h = j.at("homogeneous");
    if (!h.is_object() || !h.contains("lambda")) {
      throw UsageError("'homogeneous' must be an object with 'lambda'");
    }
    return Spectrum::Homogeneous(NumFrom(h.at("lambda"), "lambda"));
  }
  throw UsageError("input must contain 'eigenvalues', 'homogeneous' or 'protocol'");
}

ProtocolDescriptor ParseProtocol(const Json& j) {
  const Json& p = j.at("protocol");
  if (!p.is_object() || !p.contains("family") || !p.at("family").is_string()) {
    throw UsageError("'protocol' must be an object with a string 'family'");
  }
  ProtocolParams params;
  auto int_field = [&](const char* key, int& dst) {
    if (p.contains(key)) dst = static_cast<int>(NumFrom(p.at(key), key));
  };
  int_field("d", params.d);
  int_field("n", params.n);
  int_field("chi", params.chi);
  int_field("max_degree", params.max_degree);
  int_field("k", params.k);
  if (p.contains("schmidt")) {
    for (const Json& x : p.at("schmidt")) params.schmidt.push_back(NumFrom(x, "schmidt"));
  }
  if (p.contains("adaptive_gap")) params.adaptive_gap = p.at("adaptive_gap").get<bool>();
  return Describe(ParseFamily(p.at("family").get<std::string>()), params);
}

PrecisionTarget Target(const Options& o) {
  if (o.epsilon.empty() || o.delta.empty()) throw UsageError("--epsilon and --delta are required");
  return PrecisionTarget(ParseNumber(o.epsilon), ParseNumber(o.delta));
}

int NumTests(const Options& o) {
  if (o.num_tests.empty()) throw UsageError("--N is required");
  const int n = IntFrom(o.num_tests, "--N");
  if (n < 1) throw UsageError("--N must be at least 1");
  return n;
}

void EchoFlags(Report& r, const Options& o) {
  Json& q = r.request();
  q["command"] = r.command();
  auto num = [&](const char* key, const std::string& v) {
    if (!v.empty()) q[key] = ParseNumber(v);
  };
  num("epsilon", o.epsilon);
  num("delta", o.delta);
  if (!o.num_tests.empty()) q["N"] = IntFrom(o.num_tests, "--N");
  num("beta", o.beta);
  num("tau", o.tau);
  num("lambda", o.lambda);
  num("fidelity", o.fidelity);
}

void AddNonadversarial(Report& r, double nu, const PrecisionTarget& t) {
  try {
    const NaTestCount na = NumTestsNonadversarial(nu, t);
    r.Add("num_tests_na", na.exact, "nonadversarial-log-ratio");
    r.Add("num_tests_na_simple_upper", na.simple_upper, "nonadversarial-simple-bound");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNumericalRange) throw;
    r.Add("num_tests_na_asymptotic", std::log(1.0 / t.delta) / (nu * t.epsilon),
          "nonadversarial-asymptotic");
    r.Warn("nu * epsilon is below 1e-12; reporting the asymptotic count ln(1/delta)/(nu epsilon)");
  }
}

int CmdAnalyze(const Options& o, std::istream& in, Report& r) {
  const Json input = LoadInput(o, in);
  r.request()["input"] = input;
  const Spectrum s = ParseStrategy(input);
  r.Add("eigenvalues", s.eigenvalues(), "input");
  r.Add("distinct_eigenvalues", s.distinct(), "spectrum");
  r.Add("beta", s.beta(), "spectrum");
  r.Add("tau", s.tau(), "spectrum");
  r.Add("nu", s.nu(), "spectrum");
  r.Add("homogeneous", s.is_homogeneous(), "spectrum");
  r.Add("singular", s.is_singular(), "spectrum");
  r.Add("beta_tilde", BetaTilde(s), "beta-tilde");
  if (!s.is_singular()) r.Add("h", HFactor(s), "h-factor");
  if (!o.num_tests.empty()) {
    const int n = NumTests(o);
    r.Add("delta_c", CriticalDelta(n, s), "critical-delta");
    if (!o.delta.empty()) {
      const double delta = ParseNumber(o.delta);
      if (s.is_homogeneous()) {
        r.Add("fidelity_adversarial", FidelityHomogeneous(n, delta, s.beta()),
              "homogeneous-closed-form");
      } else {
        r.Add("fidelity_adversarial", FidelityAdversarial(n, delta, s, o.cap), "hull-exact");
      }
    }
  }
  if (!o.epsilon.empty()) {
    r.Add("max_pass_probability", MaxPassProbability(s, ParseNumber(o.epsilon)),
          "nonadversarial-pass-probability");
    if (!o.delta.empty()) {
      const PrecisionTarget t = Target(o);
      AddNonadversarial(r, s.nu(), t);
      r.Add("single_test_sufficient_na", SingleTestSufficientNonadversarial(s, t),
            "nonadversarial-log-ratio");
    }
  }
  return kExitOk;
}

void PlanStrategy(const Options& o, const Spectrum& s, const PrecisionTarget& t, Report& r) {
  r.Add("nu", s.nu(), "spectrum");
  r.Add("tau", s.tau(), "spectrum");
  AddNonadversarial(r, s.nu(), t);
  if (!o.adversarial) return;

  double p = 0.0;
  std::string hedge_source = "no-hedge";
  if (o.hedge == "auto") {
    const PStar ps = OptimalHedge(s.nu(), s.tau());
    p = ps.p;
    hedge_source = ps.branch == PStarBranch::kNoHedge ? "no-hedge" : "optimal-hedge";
    if (ps.side_condition_moved_root) {
      r.Warn("optimal hedge moved by the side condition on the balance root");
    }
  } else if (o.hedge.rfind("p=", 0) == 0) {
    p = ParseNumber(o.hedge.substr(2));
    hedge_source = "user-hedge";
  } else if (o.hedge != "none") {
    throw UsageError("--hedge must be auto, none or p=VALUE");
  }
  r.Add("hedge_p", p, hedge_source);
  const Spectrum h = p > 0.0 ? Hedge(s, p) : s;
  if (p > 0.0) {
    r.Add("hedged_beta", h.beta(), "hedged-spectrum");
    r.Add("hedged_tau", h.tau(), "hedged-spectrum");
  }
  if (h.is_singular()) {
    r.Warn("singular strategy without hedging: the adversarial test count scales as 1/delta");
  }

  if (h.is_homogeneous()) {
    r.Add("num_tests_adv", MinTestsHomogeneous(t, h.beta()).num_tests,
          "homogeneous-closed-form");
    const HomogeneousTestBounds b = TestsBoundsHomogeneous(t, h.beta());
    r.Add("num_tests_adv_lower", b.lower, "homogeneous-k-bracket");
    r.Add("num_tests_adv_upper", b.upper, "homogeneous-k-bracket");
  } else {
    try {
      r.Add("num_tests_adv", MinTestsAdversarial(h, t, o.cap), "hull-search");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSizeLimit) throw;
      r.Warn("exact adversarial count exceeds the composition cap; only bounds reported");
    }
  }
  const GeneralTestBounds g = TestsBoundsGeneral(h, t);
  r.Add("universal_upper", g.universal_upper, "universal-bound");
  if (g.singular_lower) r.Add("singular_lower", *g.singular_lower, "singular-lower-bound");
  if (!h.is_singular()) {
    const NonsingularTestBounds nb = TestsBoundsNonsingular(h, t);
    r.Add("nonsingular_lower", nb.lower, "nonsingular-lower-bound");
    r.Add("nonsingular_upper", nb.upper, "nonsingular-upper-bound");
  }
  if (p > 0.0) {
    try {
      const HedgedTestBound hb = HedgedTestsUpper(s, t, p);
      r.Add("hedged_h", hb.h, "hedged-h-factor");
      r.Add("hedged_bound", hb.bound, "hedged-h-bound");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutOfRange) throw;
      r.Warn("hedge outside the range covered by the hedged bound");
    }
  }
}

void PlanProtocol(const Options& o, const ProtocolDescriptor& d, const PrecisionTarget& t,
                  Report& r) {
  r.Add("family", FamilyName(d.family), "input");
  r.Add("nu", d.nu, "protocol-catalog");
  r.Add("homogeneous", d.homogeneous, "protocol-catalog");
  r.Add("settings", d.settings, "protocol-catalog");
  if (d.settings_is_minimum) r.Warn("no catalog setting count; reporting the two-setting minimum");
  if (d.adaptive_nu) r.Add("adaptive_nu", *d.adaptive_nu, "protocol-catalog");
  if (o.hedge != "auto") r.Warn("--hedge is ignored for protocol requests");
  const ProtocolPlan plan = Plan(d, t, o.adversarial);
  r.Add("num_tests_na", plan.num_tests_na, "nonadversarial-log-ratio");
  if (!o.adversarial) return;
  r.Add("hedge_p", plan.hedge_p, "protocol-hedge");
  if (plan.num_tests_adv) {
    r.Add("num_tests_adv", *plan.num_tests_adv, plan.formula);
    r.Add("log_coefficient",
          static_cast<double>(*plan.num_tests_adv) * t.epsilon / std::log(1.0 / t.delta),
          "derived-ratio");
  }
  if (plan.adv_bound) r.Add("adv_bound", *plan.adv_bound, plan.formula);
}

int CmdPlan(const Options& o, std::istream& in, Report& r) {
  const Json input = LoadInput(o, in);
  r.request()["input"] = input;
  r.request()["adversarial"] = o.adversarial;
  r.request()["hedge"] = o.hedge;
  const PrecisionTarget t = Target(o);
  if (input.contains("protocol")) {
    PlanProtocol(o, ParseProtocol(input), t, r);
  } else {
    PlanStrategy(o, ParseStrategy(input), t, r);
  }
  return kExitOk;
}

int CmdSingleCopy(const Options& o, Report& r) {
  const PrecisionTarget t = Target(o);
  const bool feasible = SingleCopyFeasible(t);
  r.Add("feasible", feasible, "single-copy-threshold");
  r.Add("required_zeta", t.delta * t.fidelity(), "target");
  const SingleCopyOptimum opt = MaxZetaOne(t.delta);
  r.Add("max_zeta_one", opt.value, "single-copy-optimum");
  r.Add("optimal_lambdas", opt.lambdas, "single-copy-optimum");
  bool ok = feasible;
  if (t.delta <= 0.5) {
    if (const auto w = SingleCopyLambdaWindow(t)) {
      r.Add("lambda_minus", w->lambda_minus, "single-copy-window");
      r.Add("lambda_plus", w->lambda_plus, "single-copy-window");
    }
  }
  if (!o.beta.empty()) {
    const double beta = ParseNumber(o.beta);
    const double tau = o.tau.empty() ? 0.0 : ParseNumber(o.tau);
    const bool sf = SingleCopyStrategyFeasible(beta, tau, t);
    r.Add("zeta_one", ZetaOneGeneral(t.delta, beta, tau), "single-copy-general");
    r.Add("strategy_feasible", sf, "single-copy-general");
    ok = ok && sf;
  }
  r.Add("verdict", ok ? "feasible" : "infeasible", "single-copy-threshold");
  return ok ? kExitOk : kExitInfeasible;
}

int CmdTable1(const Options& o, Report& r) {
  const PrecisionTarget t = Target(o);
  r.request()["entangled_d"] = o.table.entangled_d;
  r.request()["qudit_d"] = o.table.qudit_d;
  r.request()["chi"] = o.table.chi;
  r.request()["dicke_n"] = o.table.dicke_n;
  r.SetColumns({{"label", ""},
                {"family", ""},
                {"nu", "protocol-catalog"},
                {"homogeneous", "protocol-catalog"},
                {"n_na_formula", "catalog-nonadversarial-formula"},
                {"n_adv_formula", "catalog-adversarial-formula"},
                {"n_na_exact", "nonadversarial-log-ratio"},
                {"n_adv_plan", "adversarial-plan"},
                {"adv_plan_formula", ""}});
  for (const Table1Row& row : Table1(t, o.table)) {
    r.AddRow({row.label, FamilyName(row.family), row.nu, row.homogeneous, row.n_na_formula,
              row.n_adv_formula, row.n_na_exact, row.n_adv_plan, row.adv_plan_formula});
  }
  return kExitOk;
}

int CmdSweep(const Options& o, Report& r) {
  if (o.range.empty()) throw UsageError("--range a:b:n is required");
  const std::vector<double> xs = ParseRange(o.range);
  r.request()["param"] = o.param;
  r.request()["range"] = o.range;
  const auto opt_num = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return ParseNumber(s);
  };
  if (o.param == "lambda") {
    const PrecisionTarget t = Target(o);
    r.SetColumns({{"lambda", "input"},
                  {"num_tests_adv", "homogeneous-closed-form"},
                  {"num_tests_na", "nonadversarial-log-ratio"},
                  {"lower", "homogeneous-k-bracket"},
                  {"upper", "homogeneous-k-bracket"}});
    for (double lambda : xs) {
      const HomogeneousTestBounds b = TestsBoundsHomogeneous(t, lambda);
      r.AddRow({lambda, MinTestsHomogeneous(t, lambda).num_tests,
                NumTestsNonadversarial(1.0 - lambda, t).exact, b.lower, b.upper});
    }
  } else if (o.param == "delta") {
    if (o.epsilon.empty()) throw UsageError("--epsilon is required");
    const double epsilon = ParseNumber(o.epsilon);
    const double lambda = opt_num(o.lambda).value_or(kInvE);
    r.request()["lambda"] = lambda;
    r.SetColumns({{"delta", "input"},
                  {"num_tests_adv", "homogeneous-closed-form"},
                  {"num_tests_na", "nonadversarial-log-ratio"},
                  {"universal_upper_real", "universal-bound"},
                  {"log_approx", "homogeneous-log-approx"}});
    for (double delta : xs) {
      const PrecisionTarget t(epsilon, delta);
      const GeneralTestBounds g = TestsBoundsGeneral(Spectrum::Homogeneous(lambda), t);
      Json approx = nullptr;
      if (lambda > 0.0) approx = TestsBoundsHomogeneous(t, lambda).simple_upper_real;
      r.AddRow({delta, MinTestsHomogeneous(t, lambda).num_tests,
                NumTestsNonadversarial(1.0 - lambda, t).exact, g.universal_upper_real, approx});
    }
  } else if (o.param == "epsilon") {
    const std::optional<double> lambda = opt_num(o.lambda);
    const std::optional<double> delta = opt_num(o.delta);
    std::vector<std::pair<std::string, std::string>> cols = {
        {"epsilon", "input"},
        {"optimal_lambda", "optimal-lambda"},
        {"normalized_overhead_optimal", "normalized-overhead"}};
    if (lambda) cols.push_back({"normalized_overhead_at_lambda", "normalized-overhead"});
    if (delta) cols.push_back({"num_tests_adv_optimal", "homogeneous-closed-form"});
    r.SetColumns(cols);
    for (double eps : xs) {
      const NormalizedOverhead n = NormalizedOverheadHomogeneous(eps, lambda);
      std::vector<Json> row = {eps, n.optimal_lambda, n.at_optimal};
      if (lambda) row.push_back(*n.at_lambda);
      if (delta) {
        row.push_back(MinTestsHomogeneous(PrecisionTarget(eps, *delta), n.optimal_lambda).num_tests);
      }
      r.AddRow(std::move(row));
    }
  } else if (o.param == "nu") {
    const double tau = opt_num(o.tau).value_or(0.0);
    const bool bounds = !o.epsilon.empty() && !o.delta.empty();
    std::vector<std::pair<std::string, std::string>> cols = {
        {"nu", "input"},
        {"p_star", "optimal-hedge"},
        {"h_star", "hedged-h-factor"},
        {"nu_h_star", "hedged-h-factor"},
        {"default_hedge_h", "default-hedge"},
        {"default_hedge_gap", "default-hedge"}};
    if (bounds) cols.push_back({"hedged_bound", "hedged-h-bound"});
    r.SetColumns(cols);
    for (double nu : xs) {
      const PStar ps = OptimalHedge(nu, tau);
      const double hs = HedgedHFactor(ps.p, nu, tau);
      const double hd = HedgedHFactor(DefaultHedge(nu), nu, tau);
      std::vector<Json> row = {nu, ps.p, hs, nu * hs, hd, (hd - hs) / hs};
      if (bounds) row.push_back(HedgedTestsUpper(nu, tau, Target(o), ps.p).bound);
      r.AddRow(std::move(row));
    }
  } else {
    throw UsageError("--param must be lambda, delta, epsilon or nu");
  }
  return kExitOk;
}

void AddEstimate(Report& r, const std::string& name, const McEstimate& e,
                 const std::string& model) {
  r.Add(name + "_estimate", e.estimate, "monte-carlo");
  r.Add(name + "_expected", e.expected, model);
  r.Add(name + "_sigma", e.sigma, "binomial-standard-error");
  r.Add(name + "_z_score", e.ZScore(), "monte-carlo");
  if (std::abs(e.ZScore()) > 5.0) r.Warn(name + " estimate deviates by more than 5 sigma");
}

void AddRunInfo(Report& r, std::int64_t trials, std::uint64_t seed, const std::string& rng) {
  r.Add("trials", trials, "input");
  r.Add("seed", seed, "input");
  r.Add("rng", rng, "rng");
}

std::vector<double> Weights(const Json& j, const char* what) {
  if (!j.contains("weights") || !j.at("weights").is_array()) {
    throw UsageError(std::string(what) + " requires a 'weights' array");
  }
  std::vector<double> w;
  for (const Json& x : j.at("weights")) w.push_back(NumFrom(x, "weight"));
  return w;
}

int CmdSimIid(const Options& o, std::istream& in, Report& r) {
  const Json input = LoadInput(o, in);
  r.request()["input"] = input;
  const Spectrum s = ParseStrategy(input);
  if (!input.contains("state")) throw UsageError("iid simulation requires a 'state' object");
  const IidResult res = RunIid(s, {Weights(input.at("state"), "state")}, NumTests(o), o.trials,
                               o.seed);
  AddEstimate(r, "pass", res.pass, "iid-pass-probability");
  AddRunInfo(r, res.trials, res.seed, res.rng);
  return kExitOk;
}

int CmdSimBlock(const Options& o, std::istream& in, Report& r) {
  const Json input = LoadInput(o, in);
  r.request()["input"] = input;
  const Spectrum s = ParseStrategy(input);
  if (!input.contains("block")) throw UsageError("block simulation requires a 'block' object");
  const Json& b = input.at("block");
  BlockModel model;
  model.weights = Weights(b, "block");
  if (!b.contains("compositions")) throw UsageError("block requires 'compositions'");
  for (const Json& k : b.at("compositions")) {
    model.compositions.emplace_back();
    for (const Json& x : k) model.compositions.back().push_back(x.get<int>());
  }
  const BlockResult res = RunBlock(s, model, NumTests(o), o.trials, o.seed);
  AddEstimate(r, "pass", res.pass, "composition-mixture");
  AddEstimate(r, "pass_and_target", res.pass_and_target, "composition-mixture");
  AddRunInfo(r, res.trials, res.seed, res.rng);
  return kExitOk;
}

int CmdSimEstimator(const Options& o, Report& r) {
  if (o.lambda.empty() || o.fidelity.empty()) throw UsageError("--lambda and --fidelity are required");
  const EstimatorResult res = RunEstimator(ParseNumber(o.lambda), ParseNumber(o.fidelity),
                                           NumTests(o), o.trials, o.seed);
  r.Add("mean_fidelity", res.mean_fidelity, "monte-carlo");
  r.Add("std_fidelity", res.std_fidelity, "monte-carlo");
  r.Add("predicted_std", res.predicted_std, "homogeneous-estimator");
  r.Add("std_bound", res.std_bound, "homogeneous-estimator");
  AddRunInfo(r, res.trials, res.seed, res.rng);
  return kExitOk;
}

int ExitFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNumericalRange:
    case ErrorCode::kSizeLimit:
    case ErrorCode::kDivByZeroGuard:
    case ErrorCode::kNumericalFailure:
      return kExitNumericalFailure;
    default:
      return kExitInputError;
  }
}

}  // namespace

double ParseNumber(const std::string& text) {
  auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("invalid number '" + text + "'");
    return v;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return parse(text);
  const double den = parse(text.substr(slash + 1));
  if (den == 0.0) throw UsageError("zero denominator in '" + text + "'");
  return parse(text.substr(0, slash)) / den;
}

std::vector<double> ParseRange(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("range must be a:b:n");
  const double a = ParseNumber(parts[0]);
  const double b = ParseNumber(parts[1]);
  const int n = IntFrom(parts[2], "range count");
  if (n < 1) throw UsageError("range count must be at least 1");
  if (n == 1) return {a};
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = i + 1 == n ? b : a + (b - a) * i / (n - 1);
  return xs;
}

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Verification strategy analysis and test planning", "qsv"};
  app.require_subcommand(1);

  auto target = [&](CLI::App* s) {
    s->add_option("--epsilon", o.epsilon, "infidelity threshold (decimal or a/b)");
    s->add_option("--delta", o.delta, "significance level (decimal or a/b)");
  };
  auto format = [&](CLI::App* s) {
    return s->add_option("--format", o.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto input = [&](CLI::App* s) {
    s->add_option("input", o.input, "strategy JSON: file path, '-' for stdin, or inline");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "spectral quantities of a strategy");
  input(analyze);
  target(analyze);
  analyze->add_option("--N", o.num_tests, "number of tests");
  analyze->add_option("--cap", o.cap, "composition cap");
  format(analyze);

  CLI::App* plan = app.add_subcommand("plan", "minimum number of tests");
  input(plan);
  target(plan);
  plan->add_flag("--adversarial", o.adversarial, "adversarial preparation");
  plan->add_option("--hedge", o.hedge, "auto, none or p=VALUE");
  plan->add_option("--cap", o.cap, "composition cap");
  format(plan);

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate quantities over a parameter grid");
  sweep->add_option("--param", o.param, "lambda, delta, epsilon or nu")->required();
  sweep->add_option("--range", o.range, "a:b:n")->required();
  target(sweep);
  sweep->add_option("--lambda", o.lambda, "fixed lambda");
  sweep->add_option("--tau", o.tau, "fixed tau for nu sweeps");
  CLI::Option* sweep_format = format(sweep);

  CLI::App* single = app.add_subcommand("single-copy", "single-test feasibility");
  target(single);
  single->add_option("--beta", o.beta, "second largest eigenvalue");
  single->add_option("--tau", o.tau, "smallest eigenvalue");
  format(single);

  CLI::App* table = app.add_subcommand("table1", "protocol catalog test counts");
  target(table);
  table->add_option("--entangled-d", o.table.entangled_d, "local dimension for entangled rows");
  table->add_option("--qudit-d", o.table.qudit_d, "qudit stabilizer dimension");
  table->add_option("--chi", o.table.chi, "chromatic number");
  table->add_option("--dicke-n", o.table.dicke_n, "Dicke qubit count");
  format(table);

  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo cross-checks");
  sim->require_subcommand(1);
  auto run_flags = [&](CLI::App* s) {
    s->add_option("--N", o.num_tests, "number of tests");
    s->add_option("--trials", o.trials, "number of trials");
    s->add_option("--seed", o.seed, "RNG seed");
    format(s);
  };
  CLI::App* iid = sim->add_subcommand("iid", "independent preparations");
  input(iid);
  run_flags(iid);
  CLI::App* block = sim->add_subcommand("block", "permutation-invariant block mixture");
  input(block);
  run_flags(block);
  CLI::App* est = sim->add_subcommand("estimator", "homogeneous fidelity estimator");
  est->add_option("--lambda", o.lambda, "homogeneous eigenvalue");
  est->add_option("--fidelity", o.fidelity, "true fidelity");
  run_flags(est);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  std::string name;
  for (const CLI::App* s : app.get_subcommands()) name = s->get_name();
  for (const CLI::App* s : sim->get_subcommands()) name += " " + s->get_name();
  Report report(name);
  int code = kExitOk;
  try {
    if (sweep->parsed() && sweep_format->count() == 0) o.format = "csv";
    const Format fmt = ParseFormat(o.format);
    EchoFlags(report, o);
    if (analyze->parsed()) code = CmdAnalyze(o, in, report);
    else if (plan->parsed()) code = CmdPlan(o, in, report);
    else if (sweep->parsed()) code = CmdSweep(o, report);
    else if (single->parsed()) code = CmdSingleCopy(o, report);
    else if (table->parsed()) code = CmdTable1(o, report);
    else if (iid->parsed()) code = CmdSimIid(o, in, report);
    else if (block->parsed()) code = CmdSimBlock(o, in, report);
    else if (est->parsed()) code = CmdSimEstimator(o, report);
    out << report.Render(fmt);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitFor(e.code());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitInputError;
  }
  return code;
}

}  // namespace qsv::cli
