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

#include "ite/entropy.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <numeric>

#include <fmt/format.h>

#include "ite/cylinder_tree.h"
#include "ite/error.h"
#include "ite/parallel.h"

namespace ite {

std::string DescribeSource(const Source& source) {
  if (const auto* s = std::get_if<SymbolicSource>(&source)) {
    return fmt::format("{} on {} with r={}", s->system.ToString(),
                       s->target.ToString(), s->r);
  }
  const auto& m = std::get<MetricSource>(source);
  return fmt::format("finite metric system ({} points), |Z|={}, eps={}",
                     m.sys.size(), m.subset.size(), m.eps);
}

namespace {

SolverKind Resolve(const Source& source, SolverKind kind) {
  if (std::holds_alternative<MetricSource>(source)) {
    if (kind == SolverKind::kCompressedTree ||
        kind == SolverKind::kExplicitTree) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tree solvers apply to symbolic sources only");
    }
    return SolverKind::kBranchAndBound;
  }
  if (kind != SolverKind::kAuto) return kind;
  const auto& s = std::get<SymbolicSource>(source);
  return CylinderTree::CanCompress(s.system, s.target)
             ? SolverKind::kCompressedTree
             : SolverKind::kExplicitTree;
}

std::shared_ptr<const CylinderTree> BuildTree(const SymbolicSource& s,
                                              SolverKind kind,
                                              std::int64_t depth,
                                              const Caps& caps) {
  if (kind == SolverKind::kCompressedTree) {
    return std::make_shared<CylinderTree>(
        CylinderTree::Compressed(s.system, s.target, s.r, depth));
  }
  return std::make_shared<CylinderTree>(
      CylinderTree::Explicit(s.system, s.target, s.r, depth, caps));
}

// M(., N, theta) for one window, ready to be evaluated at many alphas.
class Prepared {
 public:
  Prepared(const Source& source, const LengthWindow& window,
           const EstimatorOptions& options,
           std::shared_ptr<const CylinderTree> tree = nullptr)
      : window_(window), budget_(options.caps.nodes) {
    const SolverKind kind = Resolve(source, options.solver);
    if (kind == SolverKind::kBranchAndBound) {
      if (const auto* s = std::get_if<SymbolicSource>(&source)) {
        instance_ = BuildSymbolicInstance(s->system, s->target, s->r, window,
                                          0.0, options.caps);
      } else {
        const auto& m = std::get<MetricSource>(source);
        instance_ = BuildMetricInstance(m.sys, m.subset, m.eps, window, 0.0,
                                        options.caps);
      }
      return;
    }
    if (tree && tree->depth() >= window.MaxLength()) {
      tree_ = std::move(tree);
    } else {
      tree_ = BuildTree(std::get<SymbolicSource>(source), kind,
                        window.MaxLength(), options.caps);
    }
  }

  MBracket At(double alpha) const {
    if (tree_) {
      const long double v = tree_->Solve(alpha, window_).value;
      return {v, v, true};
    }
    const CoverSolution sol = SolveExact(instance_->WithAlpha(alpha), budget_);
    return {sol.value_lo, sol.value_hi, sol.exact};
  }

 private:
  LengthWindow window_;
  std::uint64_t budget_;
  std::shared_ptr<const CylinderTree> tree_;
  std::optional<CoverInstance> instance_;
};

struct Bracket {
  double lo;
  double hi;
};

// Largest-alpha bracket with f(lo) >= c > f(hi).
template <typename F>
Bracket Bisect(F f, long double c, double upper, double tol) {
  if (f(0.0) < c) return {0.0, 0.0};
  double lo = 0.0;
  double hi = upper;
  for (int i = 0; i < 64 && f(hi) >= c; ++i) {
    lo = hi;
    hi = 2 * hi + 1;
  }
  if (f(hi) >= c) {
    throw Error(ErrorCode::kInvalidArgument, "no root below alpha = " +
                                                 std::to_string(hi));
  }
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (f(mid) >= c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

AlphaInterval RootOf(const Prepared& prepared, double upper,
                     const EstimatorOptions& options) {
  if (!(options.threshold > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be positive");
  }
  const long double c = options.threshold;
  const double tol = options.tolerance;
  bool exact = true;
  auto hi_side = [&](double a) {
    const MBracket m = prepared.At(a);
    exact = exact && m.exact;
    return m.hi;
  };
  const Bracket b_hi = Bisect(hi_side, c, upper, tol);
  Bracket b_lo = b_hi;
  if (!exact) {
    b_lo = Bisect([&](double a) { return prepared.At(a).lo; }, c, upper, tol);
  }
  AlphaInterval out;
  out.lo = std::max(0.0, b_lo.lo - tol);
  out.hi = b_hi.hi == 0.0 ? 0.0 : b_hi.hi + tol;
  out.exact = exact;
  return out;
}

LengthWindow MakeWindow(std::int64_t n, const Rational& theta,
                        std::optional<std::int64_t> cap,
                        const EstimatorOptions& options) {
  if (options.window_rule) return options.window_rule(n, theta, cap);
  return LengthWindow(n, theta, cap);
}

}  // namespace

MBracket MValue(const Source& source, double alpha, const LengthWindow& window,
                const EstimatorOptions& options) {
  if (!(alpha >= 0)) throw Error(ErrorCode::kInvalidArgument, "alpha < 0");
  return Prepared(source, window, options).At(alpha);
}

double AlphaUpperBound(const Source& source) {
  if (const auto* s = std::get_if<SymbolicSource>(&source)) {
    return (2.0 * s->r + 1.0) * std::log(s->system.alphabet().size()) + 1.0;
  }
  return std::log(static_cast<double>(std::get<MetricSource>(source).sys.size())) +
         1.0;
}

AlphaInterval AlphaRoot(const Source& source, const LengthWindow& window,
                        const EstimatorOptions& options) {
  return RootOf(Prepared(source, window, options), AlphaUpperBound(source),
                options);
}

std::vector<std::int64_t> NRange(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("bad N range [{}, {}]", lo, hi));
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

std::optional<std::int64_t> LengthCapFor(
    const Rational& theta, const std::vector<std::int64_t>& n_values,
    const EstimatorOptions& options) {
  if (!theta.is_zero()) return std::nullopt;
  if (options.length_cap) return options.length_cap;
  return options.cap_factor *
         *std::max_element(n_values.begin(), n_values.end());
}

EntropyEstimate EstimateEntropy(const Source& source, const Rational& theta,
                                const std::vector<std::int64_t>& n_values,
                                const EstimatorOptions& options) {
  if (n_values.size() < 4) {
    throw Error(ErrorCode::kInvalidArgument, "N range needs at least 4 values");
  }
  if (!std::is_sorted(n_values.begin(), n_values.end()) ||
      std::adjacent_find(n_values.begin(), n_values.end()) != n_values.end()) {
    throw Error(ErrorCode::kInvalidArgument, "N range must be increasing");
  }
  const auto cap = LengthCapFor(theta, n_values, options);
  EntropyEstimate est;
  est.theta = theta;
  if (const auto* s = std::get_if<SymbolicSource>(&source)) {
    est.scale = fmt::format("r={}", s->r);
  } else {
    est.scale = fmt::format("eps={}", std::get<MetricSource>(source).eps);
  }

  std::vector<LengthWindow> windows;
  for (auto n : n_values) windows.push_back(MakeWindow(n, theta, cap, options));

  // A compressed tree is prefix-stable, so one deep tree serves every N.
  std::shared_ptr<const CylinderTree> shared;
  const SolverKind kind = Resolve(source, options.solver);
  if (kind == SolverKind::kCompressedTree) {
    std::int64_t depth = 1;
    for (const auto& w : windows) depth = std::max(depth, w.MaxLength());
    shared = BuildTree(std::get<SymbolicSource>(source), kind, depth,
                       options.caps);
  }

  const double upper = AlphaUpperBound(source);
  est.per_n.resize(n_values.size());
  std::vector<std::exception_ptr> failures(n_values.size());
  ParallelFor(n_values.size(), options.jobs, [&](std::size_t i) {
    RootEntry& entry = est.per_n[i];
    entry.n = n_values[i];
    try {
      entry.root = RootOf(Prepared(source, windows[i], options, shared), upper,
                          options);
      entry.ok = true;
    } catch (const Error& e) {
      entry.error = e.what();
      failures[i] = std::current_exception();
    }
  });

  std::size_t ok = 0;
  for (const auto& e : est.per_n) ok += e.ok ? 1 : 0;
  if (2 * ok < n_values.size()) {
    for (auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }
  est.exact = true;
  bool any_tail = false;
  for (std::size_t i = n_values.size() / 2; i < n_values.size(); ++i) {
    const auto& e = est.per_n[i];
    if (!e.ok) continue;
    est.tail_lo = any_tail ? std::min(est.tail_lo, e.root.lo) : e.root.lo;
    est.tail_hi = any_tail ? std::max(est.tail_hi, e.root.hi) : e.root.hi;
    any_tail = true;
  }
  for (const auto& e : est.per_n) est.exact = est.exact && e.ok && e.root.exact;
  if (!any_tail) {
    throw Error(ErrorCode::kInvalidArgument, "no root in the tail half");
  }
  return est;
}

ThetaCurve ThetaSweep(const Source& source, const std::vector<Rational>& grid,
                      const std::vector<std::int64_t>& n_values,
                      const EstimatorOptions& options) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "theta grid must be strictly increasing");
    }
  }
  ThetaCurve curve;
  for (const auto& theta : grid) {
    curve.points.push_back(EstimateEntropy(source, theta, n_values, options));
  }
  return curve;
}

std::vector<CapacityEntry> CapacityEntropy(
    const Source& source, const std::vector<std::int64_t>& n_values,
    const EstimatorOptions& options) {
  std::vector<CapacityEntry> out;
  for (auto n : n_values) {
    const LengthWindow window(n, Rational::Integer(1));
    const MBracket m = Prepared(source, window, options).At(0.0);
    CapacityEntry e;
    e.n = n;
    e.lambda = m.hi;
    e.exact = m.exact;
    e.value = static_cast<double>(std::log(m.hi) / static_cast<long double>(n));
    out.push_back(e);
  }
  return out;
}

BernoulliMeasure::BernoulliMeasure(std::vector<double> p) : p_(std::move(p)) {
  if (p_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "measure needs >= 2 symbols");
  }
  long double total = 0;
  for (double v : p_) {
    if (!(v > 0)) {
      throw Error(ErrorCode::kInvalidArgument, "probabilities must be > 0");
    }
    total += v;
  }
  if (std::abs(total - 1.0L) > 1e-12L) {
    throw Error(ErrorCode::kInvalidArgument, "probabilities must sum to 1");
  }
}

BernoulliMeasure BernoulliMeasure::Uniform(int alphabet) {
  return BernoulliMeasure(std::vector<double>(
      static_cast<std::size_t>(alphabet), 1.0 / alphabet));
}

long double BernoulliBallMass(const BernoulliMeasure& mu,
                              const SymbolicNDS& system, const TailedPoint& x,
                              std::int64_t n, int r) {
  if (!system.all_shift()) {
    throw Error(ErrorCode::kNotShiftSystem, "ball masses need shift maps");
  }
  if (static_cast<int>(mu.p().size()) != system.alphabet().size()) {
    throw Error(ErrorCode::kInvalidArgument, "measure/alphabet size mismatch");
  }
  long double mass = 1;
  for (Coord c : DependenceCoords(system, n, r)) mass *= mu.p()[x.coord(c)];
  return mass;
}

std::vector<double> LocalEntropySequence(
    const BernoulliMeasure& mu, const SymbolicNDS& system,
    const TailedPoint& x, const std::vector<std::int64_t>& n_values, int r) {
  std::vector<double> out;
  for (auto n : n_values) {
    const long double mass = BernoulliBallMass(mu, system, x, n, r);
    out.push_back(static_cast<double>(-std::log(mass) /
                                      static_cast<long double>(n)));
  }
  return out;
}

}  // namespace ite
