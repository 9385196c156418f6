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

#ifndef ITE_SCENARIO_H_
#define ITE_SCENARIO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ite/entropy.h"
#include "ite/laws.h"

namespace ite {

inline constexpr int kReportSchema = 1;

struct Scenario {
  std::string name;
  Source source;
  std::vector<Rational> thetas;
  std::vector<std::int64_t> n_values;
  EstimatorOptions options;
  std::string out_dir;  // empty when the config names none
};

// Throws Error(kConfig) on any malformed or out-of-range field.
Scenario ParseScenario(const nlohmann::json& config);
Scenario LoadScenario(const std::string& path);

// Per-(theta, N) rows: theta,N,alpha_lo,alpha_hi,exact.
std::string CurveCsv(const std::vector<EntropyEstimate>& curve, bool log2);
// Per-theta tails.
std::string TailCsv(const std::vector<EntropyEstimate>& curve, bool log2);
nlohmann::json CurveJson(const std::string& name,
                         const std::vector<EntropyEstimate>& curve, bool log2);
nlohmann::json LawsJson(const std::vector<LawReport>& reports);

std::string FormatNumber(double v);
void WriteTextFile(const std::string& dir, const std::string& name,
                   const std::string& content);

struct Example51Options {
  std::vector<Rational> thetas{Rational(1, 4), Rational(1, 2), Rational(3, 4),
                               Rational(1, 1)};
  std::vector<std::int64_t> n_values = NRange(4, 10);
  std::optional<std::int64_t> k_max;  // default: two past the threshold
  std::int64_t decay_k = 5;
  int jobs = 1;
  bool log2 = false;
};

struct DecayRow {
  std::int64_t k = 0;
  std::int64_t n = 0;
  AlphaInterval root;
  double bound = 0;  // (2k-1) log 2 / N
};

struct Example51Report {
  std::vector<EntropyEstimate> sweep;
  std::vector<CapacityEntry> capacity;  // filled when theta = 1 is swept
  Rational family_theta;
  std::vector<std::int64_t> k_values;
  std::vector<EntropyEstimate> family;
  std::vector<bool> identical;
  ClosureSweep threshold;
  std::vector<DecayRow> decay;
  nlohmann::json summary;
};

Example51Report RunExample51(const Example51Options& options);

// Files: example51_sweep.csv, example51_family.csv, example51_decay.csv,
// example51_summary.json (plus example51_capacity.csv when theta = 1).
void WriteExample51(const Example51Report& report, const std::string& dir,
                    bool log2);
std::string Example51Text(const Example51Report& report, bool log2);

}  // namespace ite

#endif  // ITE_SCENARIO_H_
