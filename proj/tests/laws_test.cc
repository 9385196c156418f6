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
#include "ite/laws.h"

using namespace ite;

namespace {

LawOptions Defaults() { return LawOptions{}; }

void RunLaw(const std::string& law) {
  const auto reports = RunSuite(DefaultSuite(Defaults()), law, 1);
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) {
    CAPTURE(r.instance);
    CAPTURE(r.witness.dump());
    CHECK(r.law == law);
    CHECK(r.verdict == Verdict::kPass);
  }
}

}  // namespace

TEST_CASE("suite: theta monotonicity") { RunLaw("theta_monotonicity"); }
TEST_CASE("suite: continuity") { RunLaw("continuity"); }
TEST_CASE("suite: finite stability") { RunLaw("finite_stability"); }
TEST_CASE("suite: subset monotonicity") { RunLaw("subset_monotonicity"); }
TEST_CASE("suite: refinement") { RunLaw("refinement"); }
TEST_CASE("suite: closure stability") { RunLaw("closure_stability"); }
TEST_CASE("suite: power rule") { RunLaw("power_rule"); }
TEST_CASE("suite: shift lemma") { RunLaw("shift_lemma"); }
TEST_CASE("suite: invariance") { RunLaw("invariance"); }
TEST_CASE("suite: commutation") { RunLaw("commutation"); }
TEST_CASE("suite: product bounds") { RunLaw("product_bounds"); }
TEST_CASE("suite: conjugacy") { RunLaw("conjugacy"); }
TEST_CASE("suite: factor") { RunLaw("factor"); }
TEST_CASE("suite: billingsley") { RunLaw("billingsley"); }

TEST_CASE("filter selects a subset") {
  const auto suite = DefaultSuite(Defaults());
  const auto reports = RunSuite(suite, "continuity", 1);
  std::size_t expected = 0;
  for (const auto& e : suite) expected += e.law == "continuity";
  CHECK(reports.size() == expected);
  CHECK(RunSuite(suite, "no_such_law", 1).empty());
}

TEST_CASE("corrupted window arithmetic fails the continuity check") {
  LawOptions opts;
  opts.estimator.window_rule = [](std::int64_t n, Rational theta,
                                  std::optional<std::int64_t> cap) {
    return LengthWindow(n, Rational(theta.den() - theta.num(), theta.den()), cap);
  };
  const SymbolicSource src{ExampleSystem(), TargetSet::EventuallyConstant(1, 3), 0};
  const auto rep = CheckContinuityBound(src, Rational(1, 4), Rational(1, 2), opts);
  CHECK(rep.verdict == Verdict::kFail);
  REQUIRE(rep.witness.contains("failed"));
  std::set<std::string> failed;
  for (const auto& f : rep.witness["failed"]) failed.insert(f["assertion"].get<std::string>());
  CHECK(failed.count("tail_hi(theta) <= tail_hi(phi)") == 1);
  // The same scenario passes with the real window.
  CHECK(CheckContinuityBound(src, Rational(1, 4), Rational(1, 2), LawOptions{}).verdict ==
        Verdict::kPass);
}

TEST_CASE("truncation transform on a histogram") {
  // N = 4, theta = 1/4, phi = 1/2: lengths 4..8 stay, 9..16 become 8.
  const std::map<std::int64_t, long double> hist{{4, 1}, {8, 2}, {12, 3}, {16, 1}};
  const double s = 0.3;
  const auto out = TruncationTransform(hist, 4, Rational(1, 4), Rational(1, 2), s);
  CHECK(out.histogram == std::map<std::int64_t, long double>{{4, 1}, {8, 6}});
  CHECK(out.t_n == doctest::Approx(s * 17.0 / 8.0));
  long double before = 0;
  for (const auto& [m, c] : hist) before += c * std::exp(-static_cast<long double>(s) * m);
  CHECK(static_cast<double>(out.cost_before) == doctest::Approx(static_cast<double>(before)));
  CHECK(out.certified);
  CHECK(out.cost_after <= out.cost_before);
  CHECK_THROWS_AS(TruncationTransform(hist, 4, Rational(1, 2), Rational(1, 4), s), Error);
  CHECK_THROWS_AS(TruncationTransform(hist, 4, Rational(0, 1), Rational(1, 4), s), Error);
}

TEST_CASE("truncated covers keep covering") {
  const auto sys = ExampleSystem();
  const TargetSet z = TargetSet::EventuallyConstant(1, 3);
  const std::int64_t n = 3;
  std::vector<CoverString> g;
  // Every string of length 12 over the two free visited coordinates.
  for (Symbol a : {0, 1}) {
    for (Symbol b : {0, 1}) {
      const TailedPoint x(1, 1, {a, 1, b}, 0);
      g.push_back(StringOf(sys, x, 12, 0));
    }
  }
  REQUIRE(CoversTarget(sys, z, g));
  const auto out = TruncationTransform(g, n, Rational(1, 4), Rational(1, 2), 0.5);
  CHECK(out.certified);
  for (const auto& u : out.cover) CHECK(u.length() == 6);
  CHECK(CoversTarget(sys, z, out.cover));
  g.pop_back();
  CHECK_FALSE(CoversTarget(sys, z, g));
}

TEST_CASE("closure threshold of the example") {
  ClosureSweep sweep;
  const auto rep = CheckClosureStability(ExampleSystem(), 1, 0, Rational(1, 2),
                                         NRange(1, 23), Defaults(), &sweep);
  CHECK(rep.verdict == Verdict::kPass);
  // N <= 10 at theta = 1/2 reaches length 20, visiting coordinate 20.
  CHECK(sweep.expected == 21);
  CHECK(sweep.threshold == 21);
}

TEST_CASE("reports serialize their fields") {
  const auto rep = CheckShiftLemma(ExampleSystem(), TargetSet::Whole(), 1, 0,
                                   Rational(1, 2), Defaults());
  const auto j = rep.ToJson();
  CHECK(j["law"] == "shift_lemma");
  CHECK(j["verdict"] == "pass");
  CHECK(j["witness"].contains("left"));
  CHECK(j["tolerances"]["tail"] == 1e-6);
  CHECK(std::string(VerdictName(Verdict::kSkipped)) == "skipped");
}

TEST_CASE("checks skip what they cannot decide") {
  const auto code_sys = SymbolicNDS::Constant(Alphabet(2), XorCode());
  const auto rep = CheckShiftLemma(code_sys, TargetSet::Whole(), 1, 0, Rational(1, 2),
                                   Defaults());
  CHECK(rep.verdict == Verdict::kSkipped);
  // A non-onto code leaves the image set unknown.
  const auto constant = MapSpec::Code(2, 0, 0, {0, 0});
  const auto sigma = SymbolicNDS::Steps(Alphabet(2), {}, {1});
  CHECK(CheckFactorInequality(sigma, constant, TargetSet::Whole(), 0, Rational(1, 2),
                              Defaults())
            .verdict == Verdict::kSkipped);
}

TEST_CASE("xor fibers have two points") {
  const auto sigma = SymbolicNDS::Steps(Alphabet(2), {}, {1});
  const auto rep = CheckFactorInequality(sigma, XorCode(), TargetSet::Whole(), 0,
                                         Rational(1, 2), Defaults());
  CHECK(rep.verdict == Verdict::kPass);
  for (const auto& f : rep.witness["fibers"]) CHECK(f["size"] == 2);
}
