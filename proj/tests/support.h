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

// Hand-rolled random generators shared by the property tests, and converters
// from oracle descriptions to library objects.

#ifndef ITE_TESTS_SUPPORT_H_
#define ITE_TESTS_SUPPORT_H_

#include <cstdint>
#include <cmath>
#include <random>
#include <vector>

#include "ite/metric.h"
#include "ite/symbolic.h"
#include "ite/target.h"
#include "oracles.h"

namespace testing {

using Rng = std::mt19937_64;

inline std::int64_t Uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline ite::MapSpec ToLib(const oracle::Map& f, int alphabet) {
  if (f.shift > 0) return ite::MapSpec::Shift(f.shift);
  std::vector<ite::Symbol> table(f.table.begin(), f.table.end());
  return ite::MapSpec::Code(alphabet, f.lo, f.hi, std::move(table));
}

inline ite::SymbolicNDS ToLib(const oracle::System& s) {
  std::vector<ite::MapSpec> pre, period;
  for (const auto& f : s.pre) pre.push_back(ToLib(f, s.alphabet));
  for (const auto& f : s.period) period.push_back(ToLib(f, s.alphabet));
  return ite::SymbolicNDS(ite::Alphabet(s.alphabet), std::move(pre),
                          std::move(period));
}

inline oracle::Map ShiftMap(std::int64_t k) {
  oracle::Map m;
  m.shift = k;
  return m;
}

inline oracle::Map RandomCode(Rng& rng, int alphabet, int max_span) {
  oracle::Map m;
  m.lo = static_cast<int>(Uniform(rng, -1, 0));
  m.hi = m.lo + static_cast<int>(Uniform(rng, 0, max_span));
  std::size_t size = 1;
  for (int t = m.lo; t <= m.hi; ++t) size *= static_cast<std::size_t>(alphabet);
  for (std::size_t i = 0; i < size; ++i) {
    m.table.push_back(static_cast<int>(Uniform(rng, 0, alphabet - 1)));
  }
  return m;
}

// Steps in 1..max_step, preperiod 0..2, period 1..2.
inline oracle::System RandomShiftSystem(Rng& rng, int alphabet,
                                        std::int64_t max_step) {
  oracle::System s;
  s.alphabet = alphabet;
  const auto pre = Uniform(rng, 0, 2);
  const auto per = Uniform(rng, 1, 2);
  for (std::int64_t i = 0; i < pre; ++i) {
    s.pre.push_back(ShiftMap(Uniform(rng, 1, max_step)));
  }
  for (std::int64_t i = 0; i < per; ++i) {
    s.period.push_back(ShiftMap(Uniform(rng, 1, max_step)));
  }
  return s;
}

inline ite::TailedPoint ToPoint(const oracle::Box& b, ite::Symbol left,
                                ite::Symbol right) {
  ite::Word core(b.v.begin(), b.v.end());
  return ite::TailedPoint(left, right, std::move(core), b.lo);
}

inline ite::TailedPoint RandomPoint(Rng& rng, int alphabet, std::int64_t lo,
                                    std::int64_t hi) {
  ite::Word core;
  for (std::int64_t n = lo; n <= hi; ++n) {
    core.push_back(static_cast<ite::Symbol>(Uniform(rng, 0, alphabet - 1)));
  }
  const auto left = static_cast<ite::Symbol>(Uniform(rng, 0, alphabet - 1));
  const auto right = static_cast<ite::Symbol>(Uniform(rng, 0, alphabet - 1));
  return ite::TailedPoint(left, right, std::move(core), lo);
}

inline oracle::Box BoxOf(const ite::TailedPoint& x, std::int64_t lo,
                         std::int64_t hi) {
  oracle::Box b;
  b.lo = lo;
  for (std::int64_t n = lo; n <= hi; ++n) b.v.push_back(x.coord(n));
  return b;
}

struct MetricPair {
  ite::FiniteMetricNDS lib;
  oracle::Metric ref;
};

// Points on a line with random maps; distances are |a - b| on a grid so the
// triangle inequality holds exactly.
inline MetricPair RandomMetric(Rng& rng, std::size_t p) {
  std::vector<double> where(p);
  for (auto& w : where) w = static_cast<double>(Uniform(rng, 0, 20)) / 20.0;
  oracle::Metric m;
  m.d.assign(p, std::vector<double>(p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) m.d[i][j] = std::abs(where[i] - where[j]);
  }
  auto random_map = [&] {
    std::vector<std::size_t> f(p);
    for (auto& v : f) v = static_cast<std::size_t>(Uniform(rng, 0, static_cast<std::int64_t>(p) - 1));
    return f;
  };
  const auto pre = Uniform(rng, 0, 1);
  for (std::int64_t i = 0; i < pre; ++i) m.pre.push_back(random_map());
  const auto per = Uniform(rng, 1, 2);
  for (std::int64_t i = 0; i < per; ++i) m.period.push_back(random_map());
  return {ite::FiniteMetricNDS(m.d, m.pre, m.period), m};
}

}  // namespace testing

#endif  // ITE_TESTS_SUPPORT_H_
