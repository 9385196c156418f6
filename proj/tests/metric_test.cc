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

#include <cmath>
#include <set>

#include "doctest.h"
#include "ite/error.h"
#include "ite/metric.h"
#include "support.h"

using namespace ite;
using testing::Rng;

TEST_CASE("metric validation") {
  using M = std::vector<std::vector<double>>;
  const FiniteMetricNDS::IndexMap id{0, 1};
  CHECK_NOTHROW(FiniteMetricNDS(M{{0, 1}, {1, 0}}, {}, {id}));
  CHECK_THROWS_AS(FiniteMetricNDS(M{{0, 1}, {2, 0}}, {}, {id}), Error);
  CHECK_THROWS_AS(FiniteMetricNDS(M{{1, 1}, {1, 0}}, {}, {id}), Error);
  CHECK_THROWS_AS(FiniteMetricNDS(M{{0, -1}, {-1, 0}}, {}, {id}), Error);
  CHECK_THROWS_AS(FiniteMetricNDS(M{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}, {},
                                  {{0, 1, 2}}),
                  Error);
  CHECK_THROWS_AS(FiniteMetricNDS(M{{0, 1}, {1, 0}}, {}, {{0, 2}}), Error);
  CHECK_THROWS_AS(FiniteMetricNDS(M{{0, 1}, {1, 0}}, {}, {}), Error);
}

TEST_CASE("bowen and sup distances match the oracle") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto m = testing::RandomMetric(rng, 6);
    for (std::size_t x = 0; x < 6; ++x) {
      for (std::size_t y = 0; y < 6; ++y) {
        for (std::int64_t n = 1; n <= 4; ++n) {
          CHECK(BowenDistance(m.lib, x, y, n) == oracle::Bowen(m.ref, x, y, n));
          CHECK(SupMetric(m.lib, x, y, n) == oracle::SupBowen(m.ref, x, y, n));
          CHECK(SupMetric(m.lib, x, y, n) >= BowenDistance(m.lib, x, y, n));
        }
      }
    }
  }
}

TEST_CASE("spanning and separated counts match brute force") {
  Rng rng(32);
  for (int t = 0; t < 150; ++t) {
    const auto p = static_cast<std::size_t>(testing::Uniform(rng, 2, 7));
    const auto m = testing::RandomMetric(rng, p);
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < p; ++i) {
      if (testing::Uniform(rng, 0, 1) || z.empty()) z.push_back(i);
    }
    const double eps = static_cast<double>(testing::Uniform(rng, 1, 8)) / 20.0;
    const auto n = testing::Uniform(rng, 1, 4);
    const auto span = SpanningCount(m.lib, z, n, eps);
    const auto sup = SupSpanningCount(m.lib, z, n, eps);
    const auto sep = SeparatedCount(m.lib, z, n, eps);
    REQUIRE(span.exact);
    REQUIRE(sep.exact);
    CHECK(span.value == oracle::Spanning(m.ref, z, n, eps));
    CHECK(sup.value == oracle::Spanning(m.ref, z, n, eps, true));
    CHECK(sep.value == oracle::Separated(m.ref, z, n, eps));
    // Separated at 2 eps never exceeds spanning at eps, which never exceeds
    // separated at eps.
    CHECK(SeparatedCount(m.lib, z, n, 2 * eps).value <= span.value);
    CHECK(span.value <= sep.value);
  }
}

TEST_CASE("counts past the exact cap are flagged") {
  Rng rng(33);
  const auto m = testing::RandomMetric(rng, 7);
  CountLimits limits;
  limits.exact_cap = 3;
  const std::vector<std::size_t> z{0, 1, 2, 3, 4, 5, 6};
  const auto span = SpanningCount(m.lib, z, 2, 0.1, limits);
  CHECK_FALSE(span.exact);
  CHECK(span.value >= oracle::Spanning(m.ref, z, 2, 0.1));
  limits.require_exact = true;
  CHECK_THROWS_AS(SpanningCount(m.lib, z, 2, 0.1, limits), Error);
}

TEST_CASE("symbolic distance") {
  const auto x = TailedPoint::Constant(0);
  CHECK(SymbolicDistance(x, x) == 0.0);
  CHECK(SymbolicDistance(x, x.WithCoord(0, 1)) == 1.0);
  CHECK(SymbolicDistance(x, x.WithCoord(3, 1)) == 0.125);
  CHECK(SymbolicDistance(x, x.WithCoord(-3, 1).WithCoord(5, 1)) == 0.125);
  CHECK(SymbolicDistance(x, TailedPoint(0, 1, {}, 7)) == std::ldexp(1.0, -7));
}

TEST_CASE("shift orbit system reproduces symbolic bowen distances") {
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    std::set<TailedPoint> pts;
    while (pts.size() < 4) pts.insert(testing::RandomPoint(rng, 2, -3, 3));
    const std::vector<TailedPoint> v(pts.begin(), pts.end());
    const auto step = testing::Uniform(rng, 1, 2);
    std::vector<std::size_t> idx;
    const auto sys = ShiftOrbitSystem(v, step, 6, &idx);
    REQUIRE(idx.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        for (std::int64_t n = 1; n <= 6; ++n) {
          double want = 0;
          for (std::int64_t s = 0; s < n; ++s) {
            want = std::max(want, SymbolicDistance(v[i].Shifted(s * step),
                                                   v[j].Shifted(s * step)));
          }
          CHECK(BowenDistance(sys, idx[i], idx[j], n) == want);
        }
      }
    }
  }
}
