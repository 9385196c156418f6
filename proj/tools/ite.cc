// Copyright 2026 The Authors.
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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ite/error.h"
#include "ite/laws.h"
#include "ite/scenario.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLaw = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

int ExitFor(const ite::Error& e) {
  if (ite::IsResourceError(e.code())) return kExitResource;
  switch (e.code()) {
    case ite::ErrorCode::kConfig:
    case ite::ErrorCode::kInvalidArgument:
    case ite::ErrorCode::kThetaZeroNeedsCap:
      return kExitConfig;
    default:
      return kExitLaw;
  }
}

// Per-N failures are kept in the report; a capped one still sets exit 3.
int EstimateExit(const std::vector<ite::EntropyEstimate>& curve) {
  int code = kExitOk;
  for (const auto& e : curve) {
    for (const auto& r : e.per_n) {
      if (r.ok) continue;
      const bool capped = r.error.find("UniverseTooLarge") != std::string::npos ||
                          r.error.find("CandidateBudget") != std::string::npos ||
                          r.error.find("CapExceeded") != std::string::npos;
      code = std::max(code, capped ? kExitResource : kExitLaw);
    }
  }
  return code;
}

struct Common {
  std::string config;
  std::string out;
  int jobs = 1;
  bool log2 = false;
};

std::string OutDir(const Common& c, const ite::Scenario* sc) {
  if (!c.out.empty()) return c.out;
  if (sc && !sc->out_dir.empty()) return sc->out_dir;
  return "ite_out";
}

std::vector<ite::EntropyEstimate> RunCurve(const ite::Scenario& sc, int jobs) {
  ite::EstimatorOptions opts = sc.options;
  opts.jobs = jobs;
  std::vector<ite::EntropyEstimate> curve;
  for (const auto& t : sc.thetas) {
    curve.push_back(ite::EstimateEntropy(sc.source, t, sc.n_values, opts));
  }
  return curve;
}

void PrintTails(const std::vector<ite::EntropyEstimate>& curve, bool log2) {
  const double scale = log2 ? 1.0 / std::log(2.0) : 1.0;
  for (const auto& e : curve) {
    fmt::print("theta={:<6} tail=[{:.9f}, {:.9f}] {}\n", e.theta.ToString(),
               e.tail_lo * scale, e.tail_hi * scale,
               e.exact ? "exact" : "bracketed");
  }
}

int CmdEstimate(const Common& c, bool sweep) {
  const ite::Scenario sc = ite::LoadScenario(c.config);
  const auto curve = RunCurve(sc, c.jobs);
  const std::string dir = OutDir(c, &sc);
  const std::string stem = sweep ? "sweep" : "estimate";
  ite::WriteTextFile(dir, stem + ".csv", ite::CurveCsv(curve, c.log2));
  ite::WriteTextFile(dir, stem + "_tails.csv", ite::TailCsv(curve, c.log2));
  ite::WriteTextFile(dir, stem + ".json",
                     ite::CurveJson(sc.name, curve, c.log2).dump(2) + "\n");
  PrintTails(curve, c.log2);
  return EstimateExit(curve);
}

int CmdLaws(const Common& c, const std::string& filter) {
  ite::LawOptions opts;
  std::string dir = OutDir(c, nullptr);
  if (!c.config.empty()) {
    const ite::Scenario sc = ite::LoadScenario(c.config);
    opts.n_values = sc.n_values;
    opts.estimator = sc.options;
    dir = OutDir(c, &sc);
  }
  const auto reports = ite::RunSuite(ite::DefaultSuite(opts), filter, c.jobs);
  ite::WriteTextFile(dir, "laws.json", ite::LawsJson(reports).dump(2) + "\n");
  int code = kExitOk;
  for (const auto& r : reports) {
    fmt::print("{:<8} {:<20} {}\n", ite::VerdictName(r.verdict), r.law,
               r.instance);
    if (r.verdict != ite::Verdict::kFail) continue;
    bool capped = false;
    if (r.witness.contains("error_code")) {
      const auto name = r.witness["error_code"].get<std::string>();
      capped = name == "UniverseTooLarge" || name == "CandidateBudgetExceeded" ||
               name == "CapExceeded";
    }
    code = std::max(code, capped ? kExitResource : kExitLaw);
  }
  if (reports.empty()) fmt::print("no law matches '{}'\n", filter);
  return code;
}

int CmdExample51(const Common& c, const std::vector<std::string>& thetas,
                 std::int64_t kmax) {
  ite::Example51Options opts;
  opts.jobs = c.jobs;
  opts.log2 = c.log2;
  if (!thetas.empty()) {
    opts.thetas.clear();
    for (const auto& t : thetas) {
      ite::Rational q;
      try {
        q = ite::Rational::Parse(t);
      } catch (const ite::Error& e) {
        throw ite::Error(ite::ErrorCode::kConfig, "theta '" + t + "': " + e.what());
      }
      if (q.is_zero() || ite::Rational(1, 1) < q || q < ite::Rational(0, 1)) {
        throw ite::Error(ite::ErrorCode::kConfig,
                         "theta '" + t + "' outside (0,1]");
      }
      opts.thetas.push_back(q);
    }
  }
  if (kmax > 0) opts.k_max = kmax;
  const auto rep = ite::RunExample51(opts);
  ite::WriteExample51(rep, OutDir(c, nullptr), c.log2);
  fmt::print("{}", ite::Example51Text(rep, c.log2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intermediate entropy estimator"};
  app.require_subcommand(1);
  Common common;
  std::string filter;
  std::vector<std::string> thetas;
  std::int64_t kmax = 0;

  auto add_common = [&](CLI::App* sub, bool need_config) {
    auto* opt = sub->add_option("--config", common.config, "scenario file");
    if (need_config) opt->required();
    sub->add_option("--out", common.out, "output directory");
    sub->add_option("--jobs", common.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--log2", common.log2, "report entropies in bits");
  };
  auto* estimate = app.add_subcommand("estimate", "per-(theta,N) root table");
  add_common(estimate, true);
  auto* sweep = app.add_subcommand("sweep", "theta curve with tails");
  add_common(sweep, true);
  auto* laws = app.add_subcommand("laws", "run the law suite");
  add_common(laws, false);
  laws->add_option("--law", filter, "substring filter on law ids");
  auto* ex = app.add_subcommand("example51", "shift example reproduction");
  add_common(ex, false);
  ex->add_option("--theta", thetas, "theta values (p/q)");
  ex->add_option("--kmax", kmax, "largest k in the family sweep")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  try {
    if (*estimate) return CmdEstimate(common, false);
    if (*sweep) return CmdEstimate(common, true);
    if (*laws) return CmdLaws(common, filter);
    return CmdExample51(common, thetas, kmax);
  } catch (const ite::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return ExitFor(e);
  }
}
