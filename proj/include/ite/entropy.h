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

#ifndef ITE_ENTROPY_H_
#define ITE_ENTROPY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ite/cover.h"
#include "ite/metric.h"
#include "ite/rational.h"
#include "ite/symbolic.h"
#include "ite/target.h"

namespace ite {

struct SymbolicSource {
  SymbolicNDS system;
  TargetSet target;
  int r = 0;
};

struct MetricSource {
  FiniteMetricNDS sys;
  std::vector<std::size_t> subset;
  double eps = 0;
};

using Source = std::variant<SymbolicSource, MetricSource>;

std::string DescribeSource(const Source& source);

enum class SolverKind { kAuto, kCompressedTree, kExplicitTree, kBranchAndBound };

using WindowRule = std::function<LengthWindow(
    std::int64_t n, Rational theta, std::optional<std::int64_t> cap)>;

struct EstimatorOptions {
  Caps caps;
  SolverKind solver = SolverKind::kAuto;
  // theta = 0 length cap: length_cap if set, else cap_factor * max N.
  std::int64_t cap_factor = 4;
  std::optional<std::int64_t> length_cap;
  double threshold = 1.0;  // the level c in M(alpha) = c
  double tolerance = 1e-9;
  int jobs = 1;
  // Replaces the length window; only test fixtures set this.
  WindowRule window_rule;
};

struct MBracket {
  long double lo = 0;
  long double hi = 0;
  bool exact = false;
};

MBracket MValue(const Source& source, double alpha, const LengthWindow& window,
                const EstimatorOptions& options = {});

struct AlphaInterval {
  double lo = 0;
  double hi = 0;
  bool exact = false;
};

// Upper end of the initial bisection bracket.
double AlphaUpperBound(const Source& source);

AlphaInterval AlphaRoot(const Source& source, const LengthWindow& window,
                        const EstimatorOptions& options = {});

struct RootEntry {
  std::int64_t n = 0;
  bool ok = false;
  AlphaInterval root;
  std::string error;
};

struct EntropyEstimate {
  Rational theta;
  std::string scale;  // "r=..." or "eps=..."
  std::vector<RootEntry> per_n;
  double tail_lo = 0;
  double tail_hi = 0;
  bool exact = false;  // every successful root exact
};

std::vector<std::int64_t> NRange(std::int64_t lo, std::int64_t hi);

std::optional<std::int64_t> LengthCapFor(const Rational& theta,
                                         const std::vector<std::int64_t>& n_values,
                                         const EstimatorOptions& options);

EntropyEstimate EstimateEntropy(const Source& source, const Rational& theta,
                                const std::vector<std::int64_t>& n_values,
                                const EstimatorOptions& options = {});

struct ThetaCurve {
  std::vector<EntropyEstimate> points;
};

ThetaCurve ThetaSweep(const Source& source, const std::vector<Rational>& grid,
                      const std::vector<std::int64_t>& n_values,
                      const EstimatorOptions& options = {});

struct CapacityEntry {
  std::int64_t n = 0;
  long double lambda = 0;
  double value = 0;  // (1/n) log lambda
  bool exact = false;
};

std::vector<CapacityEntry> CapacityEntropy(
    const Source& source, const std::vector<std::int64_t>& n_values,
    const EstimatorOptions& options = {});

class BernoulliMeasure {
 public:
  explicit BernoulliMeasure(std::vector<double> p);
  static BernoulliMeasure Uniform(int alphabet);
  const std::vector<double>& p() const { return p_; }

 private:
  std::vector<double> p_;
};

long double BernoulliBallMass(const BernoulliMeasure& mu,
                              const SymbolicNDS& system, const TailedPoint& x,
                              std::int64_t n, int r);

std::vector<double> LocalEntropySequence(
    const BernoulliMeasure& mu, const SymbolicNDS& system,
    const TailedPoint& x, const std::vector<std::int64_t>& n_values, int r);

}  // namespace ite

#endif  // ITE_ENTROPY_H_
