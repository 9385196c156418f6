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

// Weighted set cover for M(Z, alpha, U, N, theta): the length window, the
// explicit instance builders, greedy and dual bounds, and an exact
// branch-and-bound that degrades to a certified bracket on budget exhaustion.

#ifndef ITE_COVER_H_
#define ITE_COVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ite/metric.h"
#include "ite/rational.h"
#include "ite/symbolic.h"
#include "ite/target.h"

namespace ite {

// Allowed string lengths: N <= n < N/theta + 1, or N..cap when theta = 0.
class LengthWindow {
 public:
  LengthWindow(std::int64_t n, Rational theta,
               std::optional<std::int64_t> cap = std::nullopt);

  std::int64_t N() const { return n_; }
  const Rational& theta() const { return theta_; }
  std::optional<std::int64_t> cap() const { return cap_; }

  bool Allows(std::int64_t m) const;
  std::int64_t MaxLength() const;

 private:
  std::int64_t n_;
  Rational theta_;
  std::optional<std::int64_t> cap_;
};

std::vector<std::int64_t> AllowedLengths(const LengthWindow& w);

struct BallTag {
  std::size_t center = 0;
  std::int64_t n = 0;
  friend bool operator==(const BallTag&, const BallTag&) = default;
};

using Provenance = std::variant<std::monostate, CoverString, BallTag>;

struct Candidate {
  std::vector<std::uint32_t> covered;  // sorted universe indices
  std::int64_t length = 1;
  double alpha = 0;
  Provenance tag;
};

struct CoverInstance {
  std::size_t universe_size = 0;
  std::vector<Candidate> candidates;

  // exp(-alpha * m), evaluated from the pair on demand.
  long double Weight(std::size_t c) const;
  CoverInstance WithAlpha(double alpha) const;
  bool IsFeasible() const;
  // Drops empty candidates and every c with cov(c) inside cov(d) and
  // m_c <= m_d (so weight_c >= weight_d for every alpha >= 0). Among equal
  // pairs the lower index survives.
  void PruneDominated();
};

struct CoverSolution {
  std::vector<std::size_t> chosen;
  long double value_lo = 0;
  long double value_hi = 0;
  bool exact = false;
  std::uint64_t nodes = 0;
};

struct Caps {
  std::size_t universe = std::size_t{1} << 16;
  std::size_t candidates = std::size_t{1} << 20;
  std::uint64_t nodes = 1'000'000;
};

// Sum of exp(-alpha m) over `chosen`, accumulated in long double from the
// longest string down. Identical multisets of (alpha, m) give identical bits.
long double CoverCost(const CoverInstance& inst,
                      std::span<const std::size_t> chosen);

bool CoversUniverse(const CoverInstance& inst,
                    std::span<const std::size_t> chosen);

CoverInstance BuildSymbolicInstance(const SymbolicNDS& system,
                                    const TargetSet& target, int r,
                                    const LengthWindow& window, double alpha,
                                    const Caps& caps = {});

CoverInstance BuildMetricInstance(const FiniteMetricNDS& sys,
                                  const std::vector<std::size_t>& subset,
                                  double eps, const LengthWindow& window,
                                  double alpha, const Caps& caps = {});

// Picks min weight / newly-covered, ties to smaller m then smaller index.
// value_lo is the dual lower bound.
CoverSolution SolveGreedy(const CoverInstance& inst);

// Sum over points of the cheapest per-element share weight/|cov|.
long double DualLowerBound(const CoverInstance& inst);

CoverSolution SolveExact(const CoverInstance& inst,
                         std::uint64_t node_budget = 1'000'000);

// Minimal number of candidates covering the universe (alpha ignored).
CountResult CardinalityCover(const CoverInstance& inst,
                             std::uint64_t node_budget = 1'000'000);

}  // namespace ite

#endif  // ITE_COVER_H_
