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

#ifndef ITE_LAWS_H_
#define ITE_LAWS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "ite/cover.h"
#include "ite/entropy.h"
#include "ite/rational.h"
#include "ite/symbolic.h"
#include "ite/target.h"

namespace ite {

enum class Verdict { kPass, kFail, kSkipped };

const char* VerdictName(Verdict v);

struct LawReport {
  std::string law;
  std::string instance;
  Verdict verdict = Verdict::kPass;
  // Measured values; on failure also the list of violated assertions.
  nlohmann::json witness = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();

  nlohmann::json ToJson() const;
};

struct LawOptions {
  EstimatorOptions estimator;
  std::vector<std::int64_t> n_values = NRange(4, 10);
  double tol = 1e-6;
};

// ---- cover surgery ----

struct TruncationResult {
  std::vector<CoverString> cover;  // empty when only lengths were given
  std::map<std::int64_t, long double> histogram;
  double t_n = 0;
  long double cost_before = 0;  // sum over G of exp(-s m)
  long double cost_after = 0;   // sum over G' of exp(-t_N m)
  bool certified = false;
};

// Keeps strings shorter than N/phi + 1 and cuts the others to their
// floor(N/phi) prefix; t_N = s (N/theta + 1) / floor(N/phi).
TruncationResult TruncationTransform(const std::vector<CoverString>& g,
                                     std::int64_t n, const Rational& theta,
                                     const Rational& phi, double s);
TruncationResult TruncationTransform(
    const std::map<std::int64_t, long double>& histogram, std::int64_t n,
    const Rational& theta, const Rational& phi, double s);

// Whether every point of Z lies in some string of the cover.
bool CoversTarget(const SymbolicNDS& system, const TargetSet& target,
                  const std::vector<CoverString>& cover, const Caps& caps = {});

// ---- checks ----

LawReport CheckThetaMonotonicity(const Source& source, const Rational& theta,
                                 const Rational& phi,
                                 const std::vector<double>& alphas,
                                 const LawOptions& options);

LawReport CheckContinuityBound(const Source& source, const Rational& theta,
                               const Rational& phi, const LawOptions& options);

LawReport CheckFiniteStability(const SymbolicNDS& system, const TargetSet& z1,
                               const TargetSet& z2, int r,
                               const Rational& theta,
                               const std::vector<double>& alphas,
                               const LawOptions& options);

LawReport CheckSubsetMonotonicity(const SymbolicNDS& system,
                                  const TargetSet& smaller,
                                  const TargetSet& larger, int r,
                                  const Rational& theta,
                                  const LawOptions& options);

LawReport CheckRefinement(const SymbolicNDS& system, const TargetSet& target,
                          const std::vector<int>& radii, const Rational& theta,
                          const LawOptions& options);

struct ClosureSweep {
  std::int64_t threshold = -1;  // smallest k_max matching the whole space
  std::int64_t expected = -1;   // max |n| over J, plus one
};

LawReport CheckClosureStability(const SymbolicNDS& system, Symbol tail, int r,
                                const Rational& theta,
                                const std::vector<std::int64_t>& k_values,
                                const LawOptions& options,
                                ClosureSweep* sweep = nullptr);

LawReport CheckPowerRule(const SymbolicNDS& system, std::int64_t m,
                         const TargetSet& target, const Rational& theta,
                         const LawOptions& options);

LawReport CheckShiftLemma(const SymbolicNDS& system, const TargetSet& target,
                          std::int64_t k, int r, const Rational& theta,
                          const LawOptions& options);

enum class Invariance { kForward, kBackward, kInvariant };

LawReport CheckInvarianceCorollaries(const SymbolicNDS& system,
                                     const TargetSet& target,
                                     Invariance invariance, std::int64_t i,
                                     std::int64_t j, int r,
                                     const Rational& theta,
                                     const LawOptions& options);

LawReport CheckCommutation(const Alphabet& alphabet, const MapSpec& f1,
                           const MapSpec& f2, const TargetSet& target, int r,
                           const Rational& theta, const LawOptions& options);

LawReport CheckProductBounds(const SymbolicSource& a, const SymbolicSource& b,
                             const Rational& theta, const LawOptions& options);

LawReport CheckConjugacy(const SymbolicSource& source,
                         const std::vector<Symbol>& perm,
                         const Rational& theta, const LawOptions& options);

LawReport CheckFactorInequality(const SymbolicNDS& system, const MapSpec& code,
                                const TargetSet& target, int r,
                                const Rational& theta,
                                const LawOptions& options);

LawReport CheckBillingsley(const SymbolicNDS& system,
                           const BernoulliMeasure& mu, const TargetSet& target,
                           const std::vector<TailedPoint>& samples, int r,
                           const Rational& theta, const LawOptions& options);

// ---- suite ----

struct SuiteEntry {
  std::string law;
  std::string instance;
  std::function<LawReport()> run;
};

std::vector<SuiteEntry> DefaultSuite(const LawOptions& options);

// Entries whose law id contains `filter` (all when empty), in suite order.
std::vector<LawReport> RunSuite(const std::vector<SuiteEntry>& suite,
                                const std::string& filter, int jobs);

// The XOR code x_n + x_{n+1} mod 2 on two symbols.
MapSpec XorCode();

// The example system f_1 = sigma^2, f_i = sigma.
SymbolicNDS ExampleSystem();

}  // namespace ite

#endif  // ITE_LAWS_H_
