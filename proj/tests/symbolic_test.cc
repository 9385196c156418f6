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

#include <set>

#include "doctest.h"
#include "ite/error.h"
#include "ite/symbolic.h"
#include "support.h"

using namespace ite;
using testing::Rng;

TEST_CASE("tailed point canonical form") {
  const TailedPoint a(0, 1, {0, 0, 1, 1}, -2);
  const TailedPoint b(0, 1, {1}, 0);
  CHECK(a == b);
  CHECK(a.coord(-100) == 0);
  CHECK(a.coord(100) == 1);
  CHECK(a.coord(-1) == 0);
  CHECK(a.coord(0) == 1);
  CHECK(a.Window(-1, 1) == Word{0, 1, 1});
  CHECK(a.Shifted(2).coord(-2) == 1);
  CHECK(a.Shifted(2).coord(-3) == 0);
  CHECK(TailedPoint::Constant(1).WithCoord(0, 0).coord(0) == 0);
}

TEST_CASE("map application matches the oracle") {
  Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    const int a = static_cast<int>(testing::Uniform(rng, 2, 3));
    const oracle::Map f = testing::Uniform(rng, 0, 1)
                              ? testing::ShiftMap(testing::Uniform(rng, 1, 3))
                              : testing::RandomCode(rng, a, 2);
    const TailedPoint x = testing::RandomPoint(rng, a, -4, 4);
    const TailedPoint y = testing::ToLib(f, a).Apply(x);
    const oracle::Box bx = testing::BoxOf(x, -12, 12);
    const oracle::Box by = oracle::Apply(f, bx, a);
    for (Coord n = -6; n <= 6; ++n) {
      CAPTURE(n);
      REQUIRE(y.coord(n) == by.at(n));
    }
  }
}

TEST_CASE("composition is application in sequence") {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const int a = 2;
    const auto f = testing::ToLib(testing::RandomCode(rng, a, 2), a);
    const auto g = testing::Uniform(rng, 0, 1)
                       ? testing::ToLib(testing::RandomCode(rng, a, 1), a)
                       : MapSpec::Shift(testing::Uniform(rng, 1, 3));
    const TailedPoint x = testing::RandomPoint(rng, a, -5, 5);
    CHECK(MapSpec::Compose(f, g).Apply(x) == f.Apply(g.Apply(x)));
    CHECK(MapSpec::Compose(g, f).Apply(x) == g.Apply(f.Apply(x)));
  }
}

TEST_CASE("code table and shift validation") {
  CHECK_THROWS_AS(MapSpec::Shift(0), Error);
  CHECK_THROWS_AS(MapSpec::Code(2, 0, 1, {0, 1, 1}), Error);
  CHECK_THROWS_AS(MapSpec::Code(2, 0, 0, {0, 2}), Error);
  CHECK_THROWS_AS(MapSpec::Code(2, 1, 0, {0, 1}), Error);
}

TEST_CASE("iterate follows the map sequence") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    oracle::System s = testing::RandomShiftSystem(rng, 2, 3);
    if (testing::Uniform(rng, 0, 1)) s.period.push_back(testing::RandomCode(rng, 2, 1));
    const SymbolicNDS lib = testing::ToLib(s);
    const TailedPoint x = testing::RandomPoint(rng, 2, -3, 3);
    oracle::Box b = testing::BoxOf(x, -30, 40);
    for (std::int64_t j = 0; j <= 5; ++j) {
      const TailedPoint y = Iterate(lib, x, j);
      for (Coord n = -2; n <= 2; ++n) REQUIRE(y.coord(n) == b.at(n));
      b = oracle::Apply(s.at(j + 1), b, 2);
    }
  }
}

TEST_CASE("cumulative offsets of the example system") {
  const auto sys = SymbolicNDS::Steps(Alphabet(2), {2}, {1});
  CHECK(CumulativeOffsets(sys, 4) == std::vector<std::int64_t>{0, 2, 3, 4, 5});
  const auto code = SymbolicNDS::Constant(Alphabet(2), MapSpec::Code(2, 0, 0, {1, 0}));
  CHECK_THROWS_AS(CumulativeOffsets(code, 3), Error);
}

TEST_CASE("dependence coordinates of shift systems") {
  const auto sys = SymbolicNDS::Steps(Alphabet(2), {2}, {1});
  CHECK(DependenceCoords(sys, 3, 0) == std::vector<Coord>{0, 2, 3});
  CHECK(DependenceCoords(sys, 2, 1) == std::vector<Coord>{-1, 0, 1, 2, 3});
}

TEST_CASE("strings depend only on the dependence coordinates") {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    oracle::System s = testing::RandomShiftSystem(rng, 2, 2);
    if (testing::Uniform(rng, 0, 2) == 0) s.period = {testing::RandomCode(rng, 2, 1)};
    const SymbolicNDS lib = testing::ToLib(s);
    const int r = static_cast<int>(testing::Uniform(rng, 0, 1));
    const std::int64_t m = testing::Uniform(rng, 1, 4);
    const auto coords = DependenceCoords(lib, m, r);
    const TailedPoint x = testing::RandomPoint(rng, 2, -8, 12);
    TailedPoint y = testing::RandomPoint(rng, 2, -8, 12);
    for (Coord c : coords) y = y.WithCoord(c, x.coord(c));
    CHECK(StringOf(lib, x, m, r) == StringOf(lib, y, m, r));
    CHECK(PointInString(lib, x, StringOf(lib, x, m, r)));
    CHECK(PointInString(lib, y, StringOf(lib, x, m, r)));
    // Changing one dependence coordinate of a shift system changes the string.
    if (lib.all_shift()) {
      const Coord c = coords[static_cast<std::size_t>(
          testing::Uniform(rng, 0, static_cast<std::int64_t>(coords.size()) - 1))];
      const TailedPoint z = x.WithCoord(c, static_cast<Symbol>(1 - x.coord(c)));
      CHECK_FALSE(StringOf(lib, x, m, r) == StringOf(lib, z, m, r));
    }
  }
}

TEST_CASE("string constraint agrees with membership") {
  Rng rng(5);
  const auto sys = SymbolicNDS::Steps(Alphabet(2), {2}, {1});
  for (int t = 0; t < 200; ++t) {
    const TailedPoint x = testing::RandomPoint(rng, 2, -3, 6);
    const TailedPoint y = testing::RandomPoint(rng, 2, -3, 6);
    const auto s = StringOf(sys, x, 3, 1);
    const auto c = StringConstraint(sys, s);
    CHECK(c.SatisfiedBy(y) == PointInString(sys, y, s));
  }
  CoverString bad;
  bad.radius = 0;
  bad.words = {{0}, {2}};
  CHECK_THROWS_AS(ValidateString(bad, Alphabet(2)), Error);
}

TEST_CASE("power and tail systems") {
  Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    const oracle::System s = testing::RandomShiftSystem(rng, 2, 3);
    const SymbolicNDS lib = testing::ToLib(s);
    const std::int64_t m = testing::Uniform(rng, 1, 3);
    const std::int64_t k = testing::Uniform(rng, 1, 4);
    const SymbolicNDS power = PowerSystem(lib, m);
    const SymbolicNDS tail = TailSystem(lib, k);
    const TailedPoint x = testing::RandomPoint(rng, 2, -3, 3);
    for (std::int64_t j = 0; j < 5; ++j) {
      CHECK(Iterate(power, x, j) == Iterate(lib, x, m * j));
      TailedPoint manual = x;
      for (std::int64_t i = 0; i < j; ++i) manual = lib.map(k + i).Apply(manual);
      CHECK(Iterate(tail, x, j) == manual);
    }
  }
}

TEST_CASE("product system acts coordinatewise") {
  const auto s1 = SymbolicNDS::Steps(Alphabet(2), {2}, {1});
  const auto s2 = SymbolicNDS::Steps(Alphabet(2), {}, {1});
  const auto p = ProductSystem(s1, s2);
  CHECK(p.alphabet().size() == 4);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto x = testing::RandomPoint(rng, 2, -3, 3);
    const auto y = testing::RandomPoint(rng, 2, -3, 3);
    Word core;
    for (Coord n = -6; n <= 6; ++n) {
      core.push_back(static_cast<Symbol>(x.coord(n) * 2 + y.coord(n)));
    }
    const TailedPoint xy(static_cast<Symbol>(x.left_tail() * 2 + y.left_tail()),
                         static_cast<Symbol>(x.right_tail() * 2 + y.right_tail()),
                         core, -6);
    for (std::int64_t j = 1; j <= 3; ++j) {
      const auto a = Iterate(s1, x, j);
      const auto b = Iterate(s2, y, j);
      const auto c = Iterate(p, xy, j);
      for (Coord n = -2; n <= 2; ++n) CHECK(c.coord(n) == a.coord(n) * 2 + b.coord(n));
    }
  }
}
