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

#include "ite/metric.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "ite/cover.h"
#include "ite/error.h"

namespace ite {

FiniteMetricNDS::FiniteMetricNDS(std::vector<std::vector<double>> distance,
                                 std::vector<IndexMap> preperiod,
                                 std::vector<IndexMap> period)
    : distance_(std::move(distance)),
      pre_(std::move(preperiod)),
      period_(std::move(period)) {
  const std::size_t p = distance_.size();
  if (p == 0) throw Error(ErrorCode::kInvalidArgument, "no points");
  if (period_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "period must be nonempty");
  }
  for (const auto& row : distance_) {
    if (row.size() != p) {
      throw Error(ErrorCode::kInvalidArgument, "distance matrix not square");
    }
  }
  for (std::size_t x = 0; x < p; ++x) {
    if (distance_[x][x] != 0) {
      throw Error(ErrorCode::kInvalidArgument, "nonzero diagonal");
    }
    for (std::size_t y = 0; y < p; ++y) {
      const double dxy = distance_[x][y];
      if (!(dxy >= 0) || !std::isfinite(dxy)) {
        throw Error(ErrorCode::kInvalidArgument, "negative distance");
      }
      if (dxy != distance_[y][x]) {
        throw Error(ErrorCode::kInvalidArgument, "distance not symmetric");
      }
      for (std::size_t z = 0; z < p; ++z) {
        if (dxy > distance_[x][z] + distance_[z][y] + kTriangleTolerance) {
          throw Error(ErrorCode::kInvalidArgument,
                      fmt::format("triangle inequality fails at ({},{},{})", x,
                                  y, z));
        }
      }
    }
  }
  auto check = [p](const IndexMap& f) {
    if (f.size() != p) {
      throw Error(ErrorCode::kInvalidArgument, "map is not total");
    }
    for (std::size_t v : f) {
      if (v >= p) throw Error(ErrorCode::kInvalidArgument, "map out of range");
    }
  };
  for (const auto& f : pre_) check(f);
  for (const auto& f : period_) check(f);
}

const FiniteMetricNDS::IndexMap& FiniteMetricNDS::map(std::int64_t i) const {
  const auto idx = static_cast<std::size_t>(i - 1);
  if (idx < pre_.size()) return pre_[idx];
  return period_[(idx - pre_.size()) % period_.size()];
}

double FiniteMetricNDS::Diameter() const {
  double best = 0;
  for (const auto& row : distance_) {
    for (double v : row) best = std::max(best, v);
  }
  return best;
}

std::size_t FiniteMetricNDS::Iterate(std::size_t x, std::int64_t start,
                                     std::int64_t j) const {
  for (std::int64_t t = 0; t < j; ++t) x = map(start + t)[x];
  return x;
}

namespace {

double BowenFrom(const FiniteMetricNDS& sys, std::size_t x, std::size_t y,
                 std::int64_t start, std::int64_t n) {
  double best = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    if (j > 0) {
      x = sys.map(start + j - 1)[x];
      y = sys.map(start + j - 1)[y];
    }
    best = std::max(best, sys.d(x, y));
  }
  return best;
}

template <typename Dist>
CountResult SpanningWith(const FiniteMetricNDS& sys,
                         const std::vector<std::size_t>& subset, double eps,
                         const CountLimits& limits, Dist dist) {
  if (subset.empty()) throw Error(ErrorCode::kInvalidArgument, "Z is empty");
  CoverInstance inst;
  inst.universe_size = subset.size();
  for (std::size_t x = 0; x < sys.size(); ++x) {
    Candidate c;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (dist(x, subset[i]) <= eps) c.covered.push_back(std::uint32_t(i));
    }
    if (!c.covered.empty()) inst.candidates.push_back(std::move(c));
  }
  inst.PruneDominated();
  if (sys.size() > limits.exact_cap) {
    if (limits.require_exact) {
      throw Error(ErrorCode::kCapExceeded, "spanning search beyond exact cap");
    }
    return {static_cast<std::int64_t>(SolveGreedy(inst).chosen.size()), false};
  }
  const CountResult r = CardinalityCover(inst, limits.node_budget);
  if (!r.exact && limits.require_exact) {
    throw Error(ErrorCode::kCapExceeded, "spanning search exhausted budget");
  }
  return r;
}

// Maximum independent set over a conflict graph given as adjacency masks.
struct IndependentSetSearch {
  const std::vector<std::uint64_t>& conflicts;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int best = 0;
  bool aborted = false;

  void Run(std::uint64_t candidates, int size) {
    if (aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    Run(candidates & ~bit & ~conflicts[v], size + 1);
    Run(candidates & ~bit, size);
  }
};

}  // namespace

double BowenDistance(const FiniteMetricNDS& sys, std::size_t x, std::size_t y,
                     std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  return BowenFrom(sys, x, y, 1, n);
}

double SupMetric(const FiniteMetricNDS& sys, std::size_t x, std::size_t y,
                 std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  const auto starts =
      static_cast<std::int64_t>(sys.preperiod_length() + sys.period_length());
  double best = 0;
  for (std::int64_t i = 1; i <= starts; ++i) {
    best = std::max(best, BowenFrom(sys, x, y, i, n));
  }
  return best;
}

CountResult SpanningCount(const FiniteMetricNDS& sys,
                          const std::vector<std::size_t>& subset,
                          std::int64_t n, double eps,
                          const CountLimits& limits) {
  return SpanningWith(sys, subset, eps, limits, [&](std::size_t a, std::size_t b) {
    return BowenDistance(sys, a, b, n);
  });
}

CountResult SupSpanningCount(const FiniteMetricNDS& sys,
                             const std::vector<std::size_t>& subset,
                             std::int64_t n, double eps,
                             const CountLimits& limits) {
  return SpanningWith(sys, subset, eps, limits, [&](std::size_t a, std::size_t b) {
    return SupMetric(sys, a, b, n);
  });
}

CountResult SeparatedCount(const FiniteMetricNDS& sys,
                           const std::vector<std::size_t>& subset,
                           std::int64_t n, double eps,
                           const CountLimits& limits) {
  if (subset.empty()) throw Error(ErrorCode::kInvalidArgument, "Z is empty");
  const std::size_t k = subset.size();
  auto conflict = [&](std::size_t i, std::size_t j) {
    return BowenDistance(sys, subset[i], subset[j], n) <= eps;
  };
  if (k > std::min<std::size_t>(limits.exact_cap, 64)) {
    if (limits.require_exact) {
      throw Error(ErrorCode::kCapExceeded, "separated search beyond exact cap");
    }
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < k; ++i) {
      bool ok = true;
      for (std::size_t c : chosen) ok = ok && !conflict(i, c);
      if (ok) chosen.push_back(i);
    }
    return {static_cast<std::int64_t>(chosen.size()), false};
  }
  std::vector<std::uint64_t> masks(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && conflict(i, j)) masks[i] |= std::uint64_t{1} << j;
    }
  }
  IndependentSetSearch search{masks, limits.node_budget};
  const std::uint64_t all = k == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << k) - 1;
  search.Run(all, 0);
  if (search.aborted && limits.require_exact) {
    throw Error(ErrorCode::kCapExceeded, "separated search exhausted budget");
  }
  return {search.best, !search.aborted};
}

std::vector<SupEntropyCell> SupEntropyEstimate(
    const FiniteMetricNDS& sys, const std::vector<std::size_t>& subset,
    const std::vector<std::int64_t>& n_values,
    const std::vector<double>& eps_values, const CountLimits& limits) {
  std::vector<SupEntropyCell> table;
  for (double eps : eps_values) {
    for (std::int64_t n : n_values) {
      SupEntropyCell cell{n, eps, SupSpanningCount(sys, subset, n, eps, limits),
                          0.0};
      cell.value = std::log(static_cast<double>(cell.count.value)) /
                   static_cast<double>(n);
      table.push_back(cell);
    }
  }
  return table;
}

double SymbolicDistance(const TailedPoint& x, const TailedPoint& y) {
  if (x == y) return 0;
  // Points differ somewhere within the cores or just past them.
  const Coord reach = std::max({std::abs(x.core_start()), std::abs(x.core_end()),
                                std::abs(y.core_start()), std::abs(y.core_end())}) +
                      1;
  for (Coord k = 0; k <= reach; ++k) {
    if (x.coord(k) != y.coord(k) || x.coord(-k) != y.coord(-k)) {
      return std::ldexp(1.0, static_cast<int>(-k));
    }
  }
  return std::ldexp(1.0, static_cast<int>(-(reach + 1)));
}

FiniteMetricNDS ShiftOrbitSystem(const std::vector<TailedPoint>& points,
                                 std::int64_t step, std::int64_t horizon,
                                 std::vector<std::size_t>* point_index) {
  if (step < 1 || horizon < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad step or horizon");
  }
  std::vector<TailedPoint> states;
  std::map<TailedPoint, std::size_t> index;
  auto intern = [&](const TailedPoint& x) {
    auto [it, inserted] = index.emplace(x, states.size());
    if (inserted) states.push_back(x);
    return it->second;
  };
  std::vector<std::size_t> roots;
  for (const auto& x : points) {
    roots.push_back(intern(x));
    for (std::int64_t j = 1; j <= horizon; ++j) intern(x.Shifted(j * step));
  }
  // States whose image leaves the truncated orbit set are frozen.
  FiniteMetricNDS::IndexMap f(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto it = index.find(states[i].Shifted(step));
    f[i] = it == index.end() ? i : it->second;
  }
  std::vector<std::vector<double>> d(states.size(),
                                     std::vector<double>(states.size(), 0.0));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      d[i][j] = d[j][i] = SymbolicDistance(states[i], states[j]);
    }
  }
  if (point_index) *point_index = roots;
  return FiniteMetricNDS(std::move(d), {}, {std::move(f)});
}

}  // namespace ite
