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

// Finite metric nonautonomous systems: Bowen metrics, spanning and separated
// counts, and the sup-metric d_n* behind the sup-entropy H.

#ifndef ITE_METRIC_H_
#define ITE_METRIC_H_

#include <cstdint>
#include <vector>

#include "ite/symbolic.h"

namespace ite {

class FiniteMetricNDS {
 public:
  using IndexMap = std::vector<std::size_t>;

  static constexpr double kTriangleTolerance = 1e-12;

  // Validates symmetry, zero diagonal, nonnegativity and the triangle
  // inequality, and that every map is a total function on the points.
  FiniteMetricNDS(std::vector<std::vector<double>> distance,
                  std::vector<IndexMap> preperiod, std::vector<IndexMap> period);

  std::size_t size() const { return distance_.size(); }
  double d(std::size_t x, std::size_t y) const { return distance_[x][y]; }
  const IndexMap& map(std::int64_t i) const;  // f_i, 1-based
  std::size_t preperiod_length() const { return pre_.size(); }
  std::size_t period_length() const { return period_.size(); }
  double Diameter() const;

  // f_start^j(x).
  std::size_t Iterate(std::size_t x, std::int64_t start, std::int64_t j) const;

 private:
  std::vector<std::vector<double>> distance_;
  std::vector<IndexMap> pre_;
  std::vector<IndexMap> period_;
};

// max_{j<n} d(f_1^j x, f_1^j y).
double BowenDistance(const FiniteMetricNDS& sys, std::size_t x, std::size_t y,
                     std::int64_t n);

// d_n* : the Bowen distance maximized over every starting time, which for an
// eventually periodic sequence is the preperiod plus one period.
double SupMetric(const FiniteMetricNDS& sys, std::size_t x, std::size_t y,
                 std::int64_t n);

struct CountResult {
  std::int64_t value = 0;
  bool exact = false;
};

struct CountLimits {
  std::size_t exact_cap = 48;  // largest |X| (spanning) or |Z| (separated)
  std::uint64_t node_budget = 1'000'000;
  bool require_exact = false;  // CapExceeded instead of a flagged bound
};

// Minimal |E|, E subset of X, with every y in Z within d_n <= eps of E.
// Inexact results are greedy upper bounds.
CountResult SpanningCount(const FiniteMetricNDS& sys,
                          const std::vector<std::size_t>& subset,
                          std::int64_t n, double eps,
                          const CountLimits& limits = {});

// Maximal |F|, F subset of Z, with pairwise d_n > eps. Inexact results are
// greedy lower bounds.
CountResult SeparatedCount(const FiniteMetricNDS& sys,
                           const std::vector<std::size_t>& subset,
                           std::int64_t n, double eps,
                           const CountLimits& limits = {});

// Same as SpanningCount with d_n replaced by d_n*.
CountResult SupSpanningCount(const FiniteMetricNDS& sys,
                             const std::vector<std::size_t>& subset,
                             std::int64_t n, double eps,
                             const CountLimits& limits = {});

struct SupEntropyCell {
  std::int64_t n = 0;
  double eps = 0;
  CountResult count;
  double value = 0;  // (1/n) log r_n*
};

std::vector<SupEntropyCell> SupEntropyEstimate(
    const FiniteMetricNDS& sys, const std::vector<std::size_t>& subset,
    const std::vector<std::int64_t>& n_values, const std::vector<double>& eps_values,
    const CountLimits& limits = {});

// d(x, y) = 2^-min{|n| : x_n != y_n}.
double SymbolicDistance(const TailedPoint& x, const TailedPoint& y);

// Finite truncation of sigma_step acting on the given points: the state set is
// every shift of every point by 0..horizon steps, and the last states map to
// themselves. Distances use SymbolicDistance. Bowen distances with
// n <= horizon agree with the symbolic system.
FiniteMetricNDS ShiftOrbitSystem(const std::vector<TailedPoint>& points,
                                 std::int64_t step, std::int64_t horizon,
                                 std::vector<std::size_t>* point_index);

}  // namespace ite

#endif  // ITE_METRIC_H_
