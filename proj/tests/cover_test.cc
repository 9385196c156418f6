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
#include <numeric>

#include "doctest.h"
#include "ite/cover.h"
#include "ite/error.h"
#include "support.h"

using namespace ite;
using testing::Rng;

namespace {

CoverInstance RandomInstance(Rng& rng, std::size_t universe, std::size_t k) {
  CoverInstance inst;
  inst.universe_size = universe;
  const double alpha = static_cast<double>(testing::Uniform(rng, 0, 20)) / 10.0;
  for (std::size_t c = 0; c < k; ++c) {
    Candidate cand;
    for (std::uint32_t u = 0; u < universe; ++u) {
      if (testing::Uniform(rng, 0, 2) == 0) cand.covered.push_back(u);
    }
    cand.length = testing::Uniform(rng, 1, 6);
    cand.alpha = alpha;
    inst.candidates.push_back(std::move(cand));
  }
  // Guarantee feasibility with a few singletons.
  for (std::uint32_t u = 0; u < universe; ++u) {
    const bool hit = std::any_of(inst.candidates.begin(), inst.candidates.end(),
                                 [&](const Candidate& c) {
                                   return std::count(c.covered.begin(), c.covered.end(), u);
                                 });
    if (!hit) inst.candidates[u % k].covered.push_back(u);
  }
  for (auto& c : inst.candidates) std::sort(c.covered.begin(), c.covered.end());
  return inst;
}

long double Oracle(const CoverInstance& inst) {
  std::vector<std::vector<std::uint32_t>> sets;
  std::vector<long double> w;
  for (const auto& c : inst.candidates) {
    sets.push_back(c.covered);
    w.push_back(std::exp(-static_cast<long double>(c.alpha) * c.length));
  }
  return oracle::ExhaustiveCover(inst.universe_size, sets, w);
}

}  // namespace

TEST_CASE("length windows") {
  CHECK(AllowedLengths(LengthWindow(4, Rational(1, 1))) == std::vector<std::int64_t>{4});
  CHECK(AllowedLengths(LengthWindow(4, Rational(1, 2))) ==
        std::vector<std::int64_t>{4, 5, 6, 7, 8});
  CHECK(LengthWindow(4, Rational(1, 4)).MaxLength() == 16);
  CHECK(LengthWindow(5, Rational(2, 3)).MaxLength() == 8);
  CHECK_THROWS_AS(LengthWindow(4, Rational(0, 1)).MaxLength(), Error);
  CHECK(LengthWindow(4, Rational(0, 1), 9).MaxLength() == 9);
  CHECK_THROWS_AS(LengthWindow(0, Rational(1, 2)), Error);
  CHECK_THROWS_AS(LengthWindow(3, Rational(3, 2)), Error);
}

TEST_CASE("window lengths agree with the definition") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t q = 1; q <= 7; ++q) {
      for (std::int64_t p = 0; p <= q; ++p) {
        const Rational theta(p, q);
        const LengthWindow w(n, theta, 3 * n);
        CHECK(AllowedLengths(w) ==
              oracle::WindowLengths(n, theta.num(), theta.den(), 3 * n));
      }
    }
  }
}

TEST_CASE("exact solver equals exhaustive enumeration") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto u = static_cast<std::size_t>(testing::Uniform(rng, 1, 10));
    const auto k = static_cast<std::size_t>(testing::Uniform(rng, 1, 12));
    const CoverInstance inst = RandomInstance(rng, u, k);
    const auto exact = SolveExact(inst);
    const auto greedy = SolveGreedy(inst);
    REQUIRE(exact.exact);
    CHECK(exact.value_hi == Oracle(inst));
    CHECK(exact.value_lo == exact.value_hi);
    CHECK(CoversUniverse(inst, exact.chosen));
    CHECK(CoverCost(inst, exact.chosen) == exact.value_hi);
    CHECK(greedy.value_hi >= exact.value_hi);
    CHECK(DualLowerBound(inst) <= exact.value_hi);
    CHECK(CoversUniverse(inst, greedy.chosen));
    CoverInstance pruned = inst;
    pruned.PruneDominated();
    CHECK(pruned.candidates.size() <= inst.candidates.size());
    CHECK(SolveExact(pruned).value_hi == exact.value_hi);
  }
}

TEST_CASE("cover cost ignores the order of the chosen list") {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const CoverInstance inst = RandomInstance(rng, 6, 10);
    std::vector<std::size_t> all(inst.candidates.size());
    std::iota(all.begin(), all.end(), 0);
    const long double base = CoverCost(inst, all);
    std::shuffle(all.begin(), all.end(), rng);
    CHECK(CoverCost(inst, all) == base);
  }
}

TEST_CASE("node budget yields a bracket") {
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    const CoverInstance inst = RandomInstance(rng, 10, 12);
    const auto truth = Oracle(inst);
    const auto cut = SolveExact(inst, 2);
    CHECK(cut.value_lo <= truth * (1 + 1e-15L));
    CHECK(cut.value_hi >= truth);
    if (!cut.exact) CHECK(cut.value_lo <= cut.value_hi);
  }
}

TEST_CASE("infeasible and empty instances") {
  CoverInstance inst;
  inst.universe_size = 2;
  inst.candidates.push_back({{0}, 1, 0.0, {}});
  CHECK_FALSE(inst.IsFeasible());
  CHECK_THROWS_AS(SolveExact(inst), Error);
  CHECK_THROWS_AS(SolveGreedy(inst), Error);
  CoverInstance empty;
  const auto sol = SolveExact(empty);
  CHECK(sol.exact);
  CHECK(sol.value_hi == 0);
}

TEST_CASE("cardinality cover counts sets") {
  Rng rng(44);
  for (int t = 0; t < 50; ++t) {
    CoverInstance inst = RandomInstance(rng, 8, 9);
    std::vector<std::vector<std::uint32_t>> sets;
    for (const auto& c : inst.candidates) sets.push_back(c.covered);
    std::vector<std::size_t> best;
    // Unit weights: the exhaustive optimum is the minimum count.
    const auto v = oracle::ExhaustiveCover(
        inst.universe_size, sets, std::vector<long double>(sets.size(), 1.0L), &best);
    const auto got = CardinalityCover(inst);
    CHECK(got.exact);
    CHECK(static_cast<long double>(got.value) == v);
  }
}

TEST_CASE("symbolic instances match the cylinder oracle") {
  Rng rng(45);
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    const oracle::System s = testing::RandomShiftSystem(rng, 2, 2);
    const SymbolicNDS lib = testing::ToLib(s);
    const std::int64_t n = testing::Uniform(rng, 1, 3);
    const Rational theta(testing::Uniform(rng, 1, 2), 2);
    const int r = static_cast<int>(testing::Uniform(rng, 0, 1));
    const LengthWindow w(n, theta);
    const double alpha = static_cast<double>(testing::Uniform(rng, 0, 10)) / 10.0;
    const std::int64_t k = testing::Uniform(rng, 1, 3);
    const TargetSet z = testing::Uniform(rng, 0, 1) ? TargetSet::Whole()
                                                    : TargetSet::EventuallyConstant(1, k);
    const auto coords = DependenceCoords(lib, w.MaxLength(), r);
    // The oracle's subset DP needs a tiny universe.
    if (coords.size() > 14 || ProjectUniverse(z, coords, Alphabet(2), 1 << 14).size() > 16) {
      continue;
    }
    ++checked;
    const auto inst = BuildSymbolicInstance(lib, z, r, w, alpha);
    const auto sol = SolveExact(inst);
    const auto pts = oracle::AllBoxes(2, -r - 1, coords.back() + 2, [&](std::int64_t c, int sym) {
      return z.kind() == TargetSet::Kind::kWhole || std::abs(c) < k || sym == 1;
    });
    const auto want = oracle::MinCylinderCover(
        s, pts, r, oracle::WindowLengths(n, theta.num(), theta.den(), 0), alpha);
    CAPTURE(lib.ToString());
    CHECK(static_cast<double>(sol.value_hi) == doctest::Approx(static_cast<double>(want)).epsilon(1e-12));
  }
  CHECK(checked > 50);
}

TEST_CASE("metric instance balls are open") {
  using M = std::vector<std::vector<double>>;
  const FiniteMetricNDS sys(M{{0, 0.5, 1}, {0.5, 0, 0.5}, {1, 0.5, 0}}, {}, {{0, 1, 2}});
  const auto inst = BuildMetricInstance(sys, {0, 1, 2}, 0.5, LengthWindow(1, Rational(1, 1)), 0.0);
  // Each ball of radius 0.5 holds only its center.
  CHECK(SolveExact(inst).value_hi == 3);
  const auto wide = BuildMetricInstance(sys, {0, 1, 2}, 0.6, LengthWindow(1, Rational(1, 1)), 0.0);
  CHECK(SolveExact(wide).value_hi == 1);
}
