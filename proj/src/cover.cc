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

#include "ite/cover.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "ite/error.h"
#include "level_codes.h"

namespace ite {

LengthWindow::LengthWindow(std::int64_t n, Rational theta,
                           std::optional<std::int64_t> cap)
    : n_(n), theta_(theta), cap_(cap) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  if (theta < Rational::Integer(0) || Rational::Integer(1) < theta) {
    throw Error(ErrorCode::kInvalidArgument,
                "theta must lie in [0,1], got " + theta.ToString());
  }
  if (theta.is_zero()) {
    if (!cap) {
      throw Error(ErrorCode::kThetaZeroNeedsCap,
                  "theta = 0 requires a length cap");
    }
    if (*cap < n) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("length cap {} below N = {}", *cap, n));
    }
  }
}

bool LengthWindow::Allows(std::int64_t m) const {
  if (m < n_) return false;
  if (theta_.is_zero()) return m <= *cap_;
  // m < N/theta + 1  <=>  (m - 1) p < N q for theta = p/q.
  const __int128 lhs = static_cast<__int128>(m - 1) * theta_.num();
  const __int128 rhs = static_cast<__int128>(n_) * theta_.den();
  return lhs < rhs;
}

std::int64_t LengthWindow::MaxLength() const {
  if (theta_.is_zero()) return *cap_;
  const __int128 nq = static_cast<__int128>(n_) * theta_.den();
  const __int128 p = theta_.num();
  return static_cast<std::int64_t>((nq + p - 1) / p);
}

std::vector<std::int64_t> AllowedLengths(const LengthWindow& w) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = w.N(); m <= w.MaxLength(); ++m) {
    if (w.Allows(m)) out.push_back(m);
  }
  return out;
}

long double CoverInstance::Weight(std::size_t c) const {
  const Candidate& cand = candidates[c];
  return std::exp(-static_cast<long double>(cand.alpha) *
                  static_cast<long double>(cand.length));
}

CoverInstance CoverInstance::WithAlpha(double alpha) const {
  CoverInstance out = *this;
  for (auto& c : out.candidates) c.alpha = alpha;
  return out;
}

bool CoverInstance::IsFeasible() const {
  std::vector<bool> hit(universe_size, false);
  for (const auto& c : candidates) {
    for (auto u : c.covered) hit[u] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

void CoverInstance::PruneDominated() {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!candidates[i].covered.empty()) order.push_back(i);
  }
  // Larger sets first so that a dominator is always examined before the
  // sets it dominates.
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return candidates[a].covered.size() > candidates[b].covered.size();
  });
  std::vector<bool> drop(candidates.size(), false);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].covered.empty()) drop[i] = true;
  }
  for (std::size_t a = 0; a < order.size(); ++a) {
    const std::size_t c = order[a];
    for (std::size_t b = 0; b < order.size() && !drop[c]; ++b) {
      const std::size_t d = order[b];
      if (c == d || drop[d]) continue;
      const auto& sc = candidates[c];
      const auto& sd = candidates[d];
      if (sd.covered.size() < sc.covered.size()) break;
      if (sc.length > sd.length) continue;
      const bool equal = sc.covered.size() == sd.covered.size() &&
                         sc.length == sd.length;
      if (equal && d > c) continue;  // the lower index survives
      if (std::includes(sd.covered.begin(), sd.covered.end(),
                        sc.covered.begin(), sc.covered.end())) {
        drop[c] = true;
      }
    }
  }
  std::vector<Candidate> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!drop[i]) kept.push_back(std::move(candidates[i]));
  }
  candidates = std::move(kept);
}

long double CoverCost(const CoverInstance& inst,
                      std::span<const std::size_t> chosen) {
  std::vector<std::size_t> order(chosen.begin(), chosen.end());
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    const long double wa = inst.Weight(a);
    const long double wb = inst.Weight(b);
    return wa != wb ? wa < wb : a < b;
  });
  long double total = 0;
  for (auto c : order) total += inst.Weight(c);
  return total;
}

bool CoversUniverse(const CoverInstance& inst,
                    std::span<const std::size_t> chosen) {
  std::vector<bool> hit(inst.universe_size, false);
  for (auto c : chosen) {
    if (c >= inst.candidates.size()) return false;
    for (auto u : inst.candidates[c].covered) hit[u] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

namespace {

void CheckCandidateCap(std::size_t count, const Caps& caps) {
  if (count > caps.candidates) {
    throw Error(ErrorCode::kCandidateBudgetExceeded,
                fmt::format("more than {} candidates", caps.candidates));
  }
}

}  // namespace

CoverInstance BuildSymbolicInstance(const SymbolicNDS& system,
                                    const TargetSet& target, int r,
                                    const LengthWindow& window, double alpha,
                                    const Caps& caps) {
  if (!(alpha >= 0)) throw Error(ErrorCode::kInvalidArgument, "alpha < 0");
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "radius < 0");
  const std::int64_t levels = window.MaxLength();
  const auto coords = DependenceCoords(system, levels, r);
  const auto universe =
      ProjectUniverse(target, coords, system.alphabet(), caps.universe);
  std::vector<Word> words;
  const auto codes = internal::LevelCodes(system, coords, universe, levels, r, &words);

  CoverInstance inst;
  inst.universe_size = universe.size();
  // Prefix ids: prefix[u] identifies the length-m string through u.
  std::vector<std::uint32_t> prefix(universe.size(), 0);
  for (std::int64_t m = 1; m <= levels; ++m) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> next;
    for (std::size_t u = 0; u < universe.size(); ++u) {
      const auto key =
          std::make_pair(prefix[u], codes[u][static_cast<std::size_t>(m - 1)]);
      auto it = next.emplace(key, static_cast<std::uint32_t>(next.size())).first;
      prefix[u] = it->second;
    }
    if (!window.Allows(m)) continue;
    const std::size_t first = inst.candidates.size();
    std::vector<std::size_t> slot(next.size(), 0);
    for (std::size_t u = 0; u < universe.size(); ++u) {
      // Candidates appear in order of their first universe point.
      if (slot[prefix[u]] == 0) {
        CheckCandidateCap(inst.candidates.size() + 1, caps);
        Candidate c;
        c.length = m;
        c.alpha = alpha;
        CoverString s{r, {}};
        for (std::int64_t j = 0; j < m; ++j) {
          s.words.push_back(words[codes[u][static_cast<std::size_t>(j)]]);
        }
        c.tag = std::move(s);
        inst.candidates.push_back(std::move(c));
        slot[prefix[u]] = inst.candidates.size() - first;
      }
      inst.candidates[first + slot[prefix[u]] - 1].covered.push_back(
          static_cast<std::uint32_t>(u));
    }
  }
  inst.PruneDominated();
  return inst;
}

CoverInstance BuildMetricInstance(const FiniteMetricNDS& sys,
                                  const std::vector<std::size_t>& subset,
                                  double eps, const LengthWindow& window,
                                  double alpha, const Caps& caps) {
  if (subset.empty()) throw Error(ErrorCode::kInvalidArgument, "Z is empty");
  if (!(alpha >= 0)) throw Error(ErrorCode::kInvalidArgument, "alpha < 0");
  if (subset.size() > caps.universe) {
    throw Error(ErrorCode::kUniverseTooLarge, "subset exceeds universe cap");
  }
  for (auto z : subset) {
    if (z >= sys.size()) {
      throw Error(ErrorCode::kInvalidArgument, "subset index out of range");
    }
  }
  const std::int64_t levels = window.MaxLength();
  CoverInstance inst;
  inst.universe_size = subset.size();
  for (std::size_t x = 0; x < sys.size(); ++x) {
    // Running Bowen distances d_n(x, z) for n = 1, 2, ...
    std::vector<double> dist(subset.size(), 0.0);
    std::vector<std::size_t> fx(subset.size(), x);
    std::vector<std::size_t> fz(subset.begin(), subset.end());
    for (std::int64_t n = 1; n <= levels; ++n) {
      for (std::size_t i = 0; i < subset.size(); ++i) {
        if (n > 1) {
          fx[i] = sys.map(n - 1)[fx[i]];
          fz[i] = sys.map(n - 1)[fz[i]];
        }
        dist[i] = std::max(dist[i], sys.d(fx[i], fz[i]));
      }
      if (!window.Allows(n)) continue;
      Candidate c;
      for (std::size_t i = 0; i < subset.size(); ++i) {
        if (dist[i] < eps) c.covered.push_back(static_cast<std::uint32_t>(i));
      }
      if (c.covered.empty()) continue;
      c.length = n;
      c.alpha = alpha;
      c.tag = BallTag{x, n};
      CheckCandidateCap(inst.candidates.size() + 1, caps);
      inst.candidates.push_back(std::move(c));
    }
  }
  inst.PruneDominated();
  return inst;
}

CoverSolution SolveGreedy(const CoverInstance& inst) {
  CoverSolution sol;
  std::vector<bool> covered(inst.universe_size, false);
  std::size_t remaining = inst.universe_size;
  std::vector<long double> weight(inst.candidates.size());
  for (std::size_t c = 0; c < weight.size(); ++c) weight[c] = inst.Weight(c);
  while (remaining > 0) {
    std::size_t best = inst.candidates.size();
    std::size_t best_new = 0;
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
      std::size_t fresh = 0;
      for (auto u : inst.candidates[c].covered) fresh += covered[u] ? 0 : 1;
      if (fresh == 0) continue;
      if (best == inst.candidates.size()) {
        best = c;
        best_new = fresh;
        continue;
      }
      // weight/fresh compared by cross-multiplication.
      const long double lhs = weight[c] * static_cast<long double>(best_new);
      const long double rhs = weight[best] * static_cast<long double>(fresh);
      if (lhs < rhs ||
          (lhs == rhs &&
           inst.candidates[c].length < inst.candidates[best].length)) {
        best = c;
        best_new = fresh;
      }
    }
    if (best == inst.candidates.size()) {
      throw Error(ErrorCode::kInfeasible, "candidates do not cover universe");
    }
    for (auto u : inst.candidates[best].covered) {
      if (!covered[u]) {
        covered[u] = true;
        --remaining;
      }
    }
    sol.chosen.push_back(best);
  }
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.value_hi = CoverCost(inst, sol.chosen);
  sol.value_lo = std::min(DualLowerBound(inst), sol.value_hi);
  sol.exact = sol.value_lo == sol.value_hi;
  return sol;
}

long double DualLowerBound(const CoverInstance& inst) {
  const long double inf = std::numeric_limits<long double>::infinity();
  std::vector<long double> share(inst.universe_size, inf);
  for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
    const auto& cand = inst.candidates[c];
    if (cand.covered.empty()) continue;
    const long double s =
        inst.Weight(c) / static_cast<long double>(cand.covered.size());
    for (auto u : cand.covered) share[u] = std::min(share[u], s);
  }
  long double total = 0;
  for (auto s : share) {
    if (s == inf) {
      throw Error(ErrorCode::kInfeasible, "candidates do not cover universe");
    }
    total += s;
  }
  // One division and one addition per point, each off by at most an ulp.
  const long double slack =
      2 * static_cast<long double>(inst.universe_size + 1) *
      std::numeric_limits<long double>::epsilon();
  return total * (1 - slack);
}

namespace {

constexpr long double kPruneSlack = 1e-12L;

class BranchAndBound {
 public:
  BranchAndBound(const CoverInstance& inst, std::uint64_t budget)
      : inst_(inst), budget_(budget), words_((inst.universe_size + 63) / 64) {
    weight_.resize(inst.candidates.size());
    for (std::size_t c = 0; c < weight_.size(); ++c) {
      weight_[c] = inst.Weight(c);
    }
    containing_.resize(inst.universe_size);
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
      for (auto u : inst.candidates[c].covered) containing_[u].push_back(c);
    }
    for (auto& list : containing_) {
      std::sort(list.begin(), list.end(), [&](auto a, auto b) {
        return weight_[a] != weight_[b] ? weight_[a] < weight_[b] : a < b;
      });
    }
  }

  CoverSolution Run() {
    CoverSolution greedy = SolveGreedy(inst_);
    best_ = greedy.chosen;
    incumbent_ = greedy.value_hi;
    std::vector<std::uint64_t> uncovered(words_, 0);
    for (std::size_t u = 0; u < inst_.universe_size; ++u) {
      uncovered[u / 64] |= std::uint64_t{1} << (u % 64);
    }
    std::vector<std::size_t> chosen;
    Search(uncovered, 0, chosen);
    CoverSolution sol;
    sol.chosen = best_;
    std::sort(sol.chosen.begin(), sol.chosen.end());
    sol.value_hi = incumbent_;
    sol.nodes = nodes_;
    if (aborted_) {
      sol.value_lo = std::min(open_bound_, incumbent_);
      sol.exact = sol.value_lo == sol.value_hi;
    } else {
      sol.value_lo = incumbent_;
      sol.exact = true;
    }
    return sol;
  }

 private:
  bool Test(const std::vector<std::uint64_t>& set, std::size_t u) const {
    return (set[u / 64] >> (u % 64)) & 1;
  }

  long double Bound(const std::vector<std::uint64_t>& uncovered) const {
    long double total = 0;
    for (std::size_t u = 0; u < inst_.universe_size; ++u) {
      if (!Test(uncovered, u)) continue;
      long double best = std::numeric_limits<long double>::infinity();
      for (auto c : containing_[u]) {
        std::size_t live = 0;
        for (auto v : inst_.candidates[c].covered) live += Test(uncovered, v);
        best = std::min(best, weight_[c] / static_cast<long double>(live));
      }
      total += best;
    }
    return total;
  }

  void Search(const std::vector<std::uint64_t>& uncovered, long double cost,
              std::vector<std::size_t>& chosen) {
    if (aborted_) return;
    std::size_t pivot = inst_.universe_size;
    for (std::size_t u = 0; u < inst_.universe_size; ++u) {
      if (!Test(uncovered, u)) continue;
      if (pivot == inst_.universe_size ||
          containing_[u].size() < containing_[pivot].size()) {
        pivot = u;
      }
    }
    if (pivot == inst_.universe_size) {
      const long double value = CoverCost(inst_, chosen);
      if (value < incumbent_) {
        incumbent_ = value;
        best_ = chosen;
      }
      return;
    }
    const long double bound = cost + Bound(uncovered);
    if (bound > incumbent_ * (1 + kPruneSlack)) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      open_bound_ = std::min(open_bound_, bound);
      return;
    }
    for (auto c : containing_[pivot]) {
      std::vector<std::uint64_t> next = uncovered;
      for (auto v : inst_.candidates[c].covered) {
        next[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      }
      chosen.push_back(c);
      Search(next, cost + weight_[c], chosen);
      chosen.pop_back();
      if (aborted_) {
        open_bound_ = std::min(open_bound_, bound);
        return;
      }
    }
  }

  const CoverInstance& inst_;
  std::uint64_t budget_;
  std::size_t words_;
  std::vector<long double> weight_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> best_;
  long double incumbent_ = 0;
  long double open_bound_ = std::numeric_limits<long double>::infinity();
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

CoverSolution SolveExact(const CoverInstance& inst, std::uint64_t node_budget) {
  if (inst.universe_size == 0) {
    CoverSolution empty;
    empty.exact = true;
    return empty;
  }
  if (!inst.IsFeasible()) {
    throw Error(ErrorCode::kInfeasible, "candidates do not cover universe");
  }
  return BranchAndBound(inst, node_budget).Run();
}

CountResult CardinalityCover(const CoverInstance& inst,
                             std::uint64_t node_budget) {
  const CoverSolution sol = SolveExact(inst.WithAlpha(0.0), node_budget);
  return {static_cast<std::int64_t>(sol.chosen.size()), sol.exact};
}

}  // namespace ite
