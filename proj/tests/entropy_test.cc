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

#include "doctest.h"
#include "ite/entropy.h"
#include "ite/error.h"
#include "ite/laws.h"
#include "support.h"

using namespace ite;
using testing::Rng;

namespace {

const double kLog2 = std::log(2.0);

}  // namespace

TEST_CASE("M values match the cylinder oracle") {
  Rng rng(61);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const oracle::System s = testing::RandomShiftSystem(rng, 2, 2);
    const SymbolicNDS lib = testing::ToLib(s);
    const std::int64_t n = testing::Uniform(rng, 1, 3);
    const Rational theta(testing::Uniform(rng, 1, 2), 2);
    const LengthWindow w(n, theta);
    const auto coords = DependenceCoords(lib, w.MaxLength(), 0);
    if (coords.size() > 4) continue;
    ++checked;
    const auto pts = oracle::AllBoxes(2, -1, coords.back() + 1, [](std::int64_t, int) { return true; });
    for (double alpha : {0.0, 0.4, kLog2, 1.3}) {
      const auto want = oracle::MinCylinderCover(
          s, pts, 0, oracle::WindowLengths(n, theta.num(), theta.den(), 0), alpha);
      for (auto kind : {SolverKind::kCompressedTree, SolverKind::kExplicitTree,
                        SolverKind::kBranchAndBound}) {
        EstimatorOptions opts;
        opts.solver = kind;
        const auto m = MValue(SymbolicSource{lib, TargetSet::Whole(), 0}, alpha, w, opts);
        CHECK(m.exact);
        CHECK(static_cast<double>(m.hi) ==
              doctest::Approx(static_cast<double>(want)).epsilon(1e-12));
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("full shift roots are log 2") {
  const auto sigma = SymbolicNDS::Steps(Alphabet(2), {}, {1});
  for (const auto& sys : {sigma, ExampleSystem()}) {
    for (const Rational theta : {Rational(1, 1), Rational(1, 2), Rational(1, 4)}) {
      for (std::int64_t n = 2; n <= 6; ++n) {
        const auto root = AlphaRoot(SymbolicSource{sys, TargetSet::Whole(), 0},
                                    LengthWindow(n, theta));
        CHECK(root.exact);
        CHECK(root.lo <= kLog2);
        CHECK(root.hi >= kLog2);
        CHECK(root.hi - root.lo <= 1e-6);
      }
    }
  }
}

TEST_CASE("capacity of Z_2 under the example system") {
  // Only coordinate 0 is free and visited, so two points per N.
  const SymbolicSource src{ExampleSystem(), TargetSet::EventuallyConstant(1, 2), 0};
  for (std::int64_t n = 2; n <= 8; ++n) {
    const auto root = AlphaRoot(src, LengthWindow(n, Rational(1, 1)));
    CHECK(root.lo <= kLog2 / n);
    CHECK(root.hi >= kLog2 / n);
  }
  const auto cap = CapacityEntropy(src, NRange(2, 6));
  for (const auto& c : cap) {
    CHECK(c.lambda == 2);
    CHECK(c.value == doctest::Approx(kLog2 / c.n));
  }
}

TEST_CASE("root of a singleton is zero") {
  const SymbolicSource src{ExampleSystem(), TargetSet::Points({TailedPoint::Constant(1)}), 1};
  const auto est = EstimateEntropy(src, Rational(1, 2), NRange(4, 8));
  CHECK(est.exact);
  CHECK(est.tail_hi <= 1e-8);
  CHECK(est.tail_lo >= 0);
}

TEST_CASE("estimator argument checks") {
  const SymbolicSource src{ExampleSystem(), TargetSet::Whole(), 0};
  CHECK_THROWS_AS(EstimateEntropy(src, Rational(1, 2), NRange(4, 6)), Error);
  CHECK_THROWS_AS(EstimateEntropy(src, Rational(1, 2), {4, 6, 5, 7}), Error);
  EstimatorOptions opts;
  opts.cap_factor = 2;
  CHECK(LengthCapFor(Rational(0, 1), NRange(4, 10), opts) == 20);
  opts.length_cap = 33;
  CHECK(LengthCapFor(Rational(0, 1), NRange(4, 10), opts) == 33);
  CHECK_FALSE(LengthCapFor(Rational(1, 2), NRange(4, 10), opts).has_value());
}

TEST_CASE("theta zero uses the length cap") {
  // Z_2 has three free coordinates, all read at r = 1. One string of length
  // cap per point is optimal, so the root is 3 log 2 / cap.
  const SymbolicSource src{SymbolicNDS::Steps(Alphabet(2), {}, {1}),
                           TargetSet::EventuallyConstant(1, 2), 1};
  EstimatorOptions opts;
  opts.length_cap = 40;
  const auto est = EstimateEntropy(src, Rational(0, 1), NRange(4, 10), opts);
  for (const auto& r : est.per_n) {
    CHECK(r.root.lo <= 3 * kLog2 / 40 + 1e-12);
    CHECK(r.root.hi >= 3 * kLog2 / 40 - 1e-12);
  }
}

TEST_CASE("parallel estimates are bit-identical") {
  const SymbolicSource src{ExampleSystem(), TargetSet::EventuallyConstant(1, 4), 1};
  EstimatorOptions one, many;
  many.jobs = 4;
  const auto a = EstimateEntropy(src, Rational(1, 3), NRange(3, 9), one);
  const auto b = EstimateEntropy(src, Rational(1, 3), NRange(3, 9), many);
  REQUIRE(a.per_n.size() == b.per_n.size());
  for (std::size_t i = 0; i < a.per_n.size(); ++i) {
    CHECK(a.per_n[i].root.lo == b.per_n[i].root.lo);
    CHECK(a.per_n[i].root.hi == b.per_n[i].root.hi);
  }
}

TEST_CASE("theta sweep tails are nondecreasing") {
  Rng rng(62);
  for (int t = 0; t < 12; ++t) {
    const SymbolicNDS lib = testing::ToLib(testing::RandomShiftSystem(rng, 2, 2));
    const TargetSet z = TargetSet::EventuallyConstant(
        static_cast<Symbol>(testing::Uniform(rng, 0, 1)), testing::Uniform(rng, 1, 5));
    const auto curve = ThetaSweep(SymbolicSource{lib, z, 0},
                                  {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1, 1)},
                                  NRange(3, 8));
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      CHECK(curve.points[i - 1].tail_hi <= curve.points[i].tail_hi + 1e-9);
    }
  }
  CHECK_THROWS_AS(ThetaSweep(SymbolicSource{ExampleSystem(), TargetSet::Whole(), 0},
                             {Rational(1, 2), Rational(1, 4)}, NRange(3, 8)),
                  Error);
}

TEST_CASE("metric estimates run on branch and bound") {
  Rng rng(63);
  const auto m = testing::RandomMetric(rng, 5);
  const MetricSource src{m.lib, {0, 1, 2}, 0.3};
  const auto est = EstimateEntropy(src, Rational(1, 2), NRange(2, 5));
  CHECK(est.tail_lo <= est.tail_hi);
  CHECK(est.tail_hi <= std::log(5.0) + 1e-9);
}

TEST_CASE("bernoulli ball masses") {
  Rng rng(64);
  const BernoulliMeasure mu({0.3, 0.7});
  const auto ex = ExampleSystem();
  for (int t = 0; t < 50; ++t) {
    const auto x = testing::RandomPoint(rng, 2, -4, 8);
    const auto n = testing::Uniform(rng, 1, 5);
    const int r = static_cast<int>(testing::Uniform(rng, 0, 1));
    long double want = 1;
    for (Coord c : DependenceCoords(ex, n, r)) want *= x.coord(c) ? 0.7L : 0.3L;
    CHECK(static_cast<double>(BernoulliBallMass(mu, ex, x, n, r)) ==
          doctest::Approx(static_cast<double>(want)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(BernoulliMeasure({0.5, 0.6}), Error);
  CHECK_THROWS_AS(BernoulliMeasure({1.0}), Error);
  CHECK_THROWS_AS(BernoulliMeasure({0.0, 1.0}), Error);
  const auto code = SymbolicNDS::Constant(Alphabet(2), XorCode());
  CHECK_THROWS_AS(BernoulliBallMass(BernoulliMeasure::Uniform(2), code,
                                    TailedPoint::Constant(0), 2, 0),
                  Error);
}

TEST_CASE("uniform local entropy is log 2") {
  const auto seq = LocalEntropySequence(BernoulliMeasure::Uniform(2), ExampleSystem(),
                                        TailedPoint(0, 1, {1, 0}, 0), NRange(4, 10), 0);
  for (double v : seq) CHECK(v == doctest::Approx(kLog2).epsilon(1e-14));
}
