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

#include "ite/laws.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <fmt/format.h>

#include "ite/cylinder_tree.h"
#include "ite/error.h"
#include "ite/parallel.h"

namespace ite {

using nlohmann::json;

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

json LawReport::ToJson() const {
  return json{{"law", law},
              {"instance", instance},
              {"verdict", VerdictName(verdict)},
              {"witness", witness},
              {"tolerances", tolerances}};
}

namespace {

constexpr double kRelSlack = 1e-12;

LawReport Start(std::string law, std::string instance, double tol) {
  LawReport rep;
  rep.law = std::move(law);
  rep.instance = std::move(instance);
  rep.tolerances["tail"] = tol;
  return rep;
}

void Expect(LawReport& rep, const std::string& what, bool ok,
            json detail = json::object()) {
  if (ok) return;
  rep.verdict = Verdict::kFail;
  rep.witness["failed"].push_back({{"assertion", what}, {"detail", detail}});
}

void Skip(LawReport& rep, const std::string& reason) {
  rep.witness["skipped"].push_back(reason);
  if (rep.verdict == Verdict::kPass) rep.verdict = Verdict::kSkipped;
}

json EstimateJson(const EntropyEstimate& e) {
  json rows = json::array();
  for (const auto& r : e.per_n) {
    if (r.ok) {
      rows.push_back({r.n, r.root.lo, r.root.hi, r.root.exact});
    } else {
      rows.push_back({r.n, r.error});
    }
  }
  return json{{"theta", e.theta.ToString()}, {"scale", e.scale},
              {"tail_lo", e.tail_lo},        {"tail_hi", e.tail_hi},
              {"exact", e.exact},            {"per_n", rows}};
}

LengthWindow WindowFor(std::int64_t n, const Rational& theta,
                       const LawOptions& opts) {
  const auto cap = LengthCapFor(theta, opts.n_values, opts.estimator);
  if (opts.estimator.window_rule) {
    return opts.estimator.window_rule(n, theta, cap);
  }
  return LengthWindow(n, theta, cap);
}

EntropyEstimate Estimate(const Source& source, const Rational& theta,
                         const LawOptions& opts) {
  return EstimateEntropy(source, theta, opts.n_values, opts.estimator);
}

EntropyEstimate Estimate(const SymbolicNDS& system, const TargetSet& target,
                         int r, const Rational& theta, const LawOptions& opts) {
  return Estimate(SymbolicSource{system, target, r}, theta, opts);
}

bool SameRoots(const EntropyEstimate& a, const EntropyEstimate& b) {
  if (a.per_n.size() != b.per_n.size()) return false;
  for (std::size_t i = 0; i < a.per_n.size(); ++i) {
    const auto& x = a.per_n[i];
    const auto& y = b.per_n[i];
    if (x.ok != y.ok || x.n != y.n) return false;
    if (x.ok && (x.root.lo != y.root.lo || x.root.hi != y.root.hi)) {
      return false;
    }
  }
  return true;
}

double MaxRootGap(const EntropyEstimate& a, const EntropyEstimate& b) {
  double gap = 0;
  for (std::size_t i = 0; i < a.per_n.size() && i < b.per_n.size(); ++i) {
    if (!a.per_n[i].ok || !b.per_n[i].ok) continue;
    gap = std::max({gap, std::abs(a.per_n[i].root.lo - b.per_n[i].root.lo),
                    std::abs(a.per_n[i].root.hi - b.per_n[i].root.hi)});
  }
  return gap;
}

std::vector<double> DefaultAlphas(int alphabet) {
  const double l = std::log(static_cast<double>(alphabet));
  return {0.0, 0.5 * l, l};
}

int AlphabetOf(const Source& source) {
  if (const auto* s = std::get_if<SymbolicSource>(&source)) {
    return s->system.alphabet().size();
  }
  return static_cast<int>(std::get<MetricSource>(source).sys.size());
}

// Minimum cover cost by enumerating every candidate subset.
long double Exhaustive(const CoverInstance& inst) {
  const std::size_t k = inst.candidates.size();
  long double best = std::numeric_limits<long double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < k; ++c) {
      if ((mask >> c) & 1) chosen.push_back(c);
    }
    if (CoversUniverse(inst, chosen)) {
      best = std::min(best, CoverCost(inst, chosen));
    }
  }
  return best;
}

json MJson(const MBracket& m) {
  return json{{"lo", static_cast<double>(m.lo)},
              {"hi", static_cast<double>(m.hi)},
              {"exact", m.exact}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Cover surgery

namespace {

struct TruncationPlan {
  std::int64_t cut = 0;  // floor(N/phi)
  double t_n = 0;
};

TruncationPlan PlanTruncation(std::int64_t n, const Rational& theta,
                              const Rational& phi, double s) {
  if (theta.is_zero() || phi.is_zero() || !(theta < phi)) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < theta < phi");
  }
  TruncationPlan plan;
  plan.cut = static_cast<std::int64_t>(
      (static_cast<__int128>(n) * phi.den()) / phi.num());
  const double top = static_cast<double>(n) / theta.ToDouble() + 1.0;
  plan.t_n = s * top / static_cast<double>(plan.cut);
  return plan;
}

}  // namespace

TruncationResult TruncationTransform(
    const std::map<std::int64_t, long double>& histogram, std::int64_t n,
    const Rational& theta, const Rational& phi, double s) {
  const TruncationPlan plan = PlanTruncation(n, theta, phi, s);
  const LengthWindow keep(n, phi);
  TruncationResult out;
  out.t_n = plan.t_n;
  for (const auto& [m, count] : histogram) {
    const std::int64_t m2 = keep.Allows(m) ? m : plan.cut;
    out.histogram[m2] += count;
    out.cost_before += count * std::exp(-static_cast<long double>(s) * m);
  }
  for (const auto& [m, count] : out.histogram) {
    out.cost_after +=
        count * std::exp(-static_cast<long double>(plan.t_n) * m);
  }
  bool lengths_ok = true;
  for (const auto& [m, count] : out.histogram) {
    lengths_ok = lengths_ok && keep.Allows(m);
  }
  out.certified =
      lengths_ok && out.cost_after <= out.cost_before * (1 + kRelSlack);
  return out;
}

TruncationResult TruncationTransform(const std::vector<CoverString>& g,
                                     std::int64_t n, const Rational& theta,
                                     const Rational& phi, double s) {
  std::map<std::int64_t, long double> histogram;
  for (const auto& u : g) histogram[static_cast<std::int64_t>(u.length())] += 1;
  TruncationResult out = TruncationTransform(histogram, n, theta, phi, s);
  const TruncationPlan plan = PlanTruncation(n, theta, phi, s);
  const LengthWindow keep(n, phi);
  for (const auto& u : g) {
    CoverString v = u;
    if (!keep.Allows(static_cast<std::int64_t>(v.length()))) {
      v.words.resize(static_cast<std::size_t>(plan.cut));
    }
    out.cover.push_back(std::move(v));
  }
  return out;
}

bool CoversTarget(const SymbolicNDS& system, const TargetSet& target,
                  const std::vector<CoverString>& cover, const Caps& caps) {
  if (cover.empty()) return false;
  std::int64_t longest = 1;
  int r = cover.front().radius;
  for (const auto& s : cover) {
    longest = std::max(longest, static_cast<std::int64_t>(s.length()));
    if (s.radius != r) {
      throw Error(ErrorCode::kInvalidArgument, "mixed cover radii");
    }
  }
  const auto coords = DependenceCoords(system, longest, r);
  const auto universe =
      ProjectUniverse(target, coords, system.alphabet(), caps.universe);
  const Coord lo = coords.front();
  const Coord hi = coords.back();
  for (const auto& w : universe) {
    Word core(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      core[static_cast<std::size_t>(coords[i] - lo)] = w[i];
    }
    const TailedPoint x(0, 0, core, lo);
    const bool hit = std::any_of(cover.begin(), cover.end(), [&](auto& s) {
      return PointInString(system, x, s);
    });
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Checks

LawReport CheckThetaMonotonicity(const Source& source, const Rational& theta,
                                 const Rational& phi,
                                 const std::vector<double>& alphas,
                                 const LawOptions& opts) {
  LawReport rep = Start("theta_monotonicity",
                        fmt::format("{}; theta={} < phi={}",
                                    DescribeSource(source), theta.ToString(),
                                    phi.ToString()),
                        opts.tol);
  rep.tolerances["m_relative"] = kRelSlack;
  if (!(theta < phi)) throw Error(ErrorCode::kInvalidArgument, "need theta < phi");
  json cells = json::array();
  bool inconclusive = false;
  for (auto n : opts.n_values) {
    const LengthWindow wt = WindowFor(n, theta, opts);
    const LengthWindow wp = WindowFor(n, phi, opts);
    std::optional<CoverInstance> small;
    if (const auto* m = std::get_if<MetricSource>(&source)) {
      CoverInstance inst =
          BuildMetricInstance(m->sys, m->subset, m->eps, wt, 0.0);
      if (inst.candidates.size() <= 16) small = std::move(inst);
    }
    for (double a : alphas) {
      const MBracket mt = MValue(source, a, wt, opts.estimator);
      const MBracket mp = MValue(source, a, wp, opts.estimator);
      json cell{{"N", n}, {"alpha", a}, {"theta", MJson(mt)}, {"phi", MJson(mp)}};
      if (mt.exact && mp.exact) {
        Expect(rep, "M(theta) <= M(phi)", mt.hi <= mp.hi * (1 + kRelSlack),
               cell);
      } else if (mt.lo > mp.hi * (1 + kRelSlack)) {
        Expect(rep, "M(theta) <= M(phi)", false, cell);
      } else if (!(mt.hi <= mp.lo)) {
        inconclusive = true;
      }
      if (small) {
        const long double oracle = Exhaustive(small->WithAlpha(a));
        cell["oracle"] = static_cast<double>(oracle);
        Expect(rep, "solver matches exhaustive oracle",
               std::abs(mt.hi - oracle) <= kRelSlack * oracle, cell);
      }
      cells.push_back(std::move(cell));
    }
  }
  rep.witness["m_values"] = std::move(cells);
  const auto et = Estimate(source, theta, opts);
  const auto ep = Estimate(source, phi, opts);
  rep.witness["theta"] = EstimateJson(et);
  rep.witness["phi"] = EstimateJson(ep);
  Expect(rep, "tail_lo(theta) <= tail_lo(phi)",
         et.tail_lo <= ep.tail_lo + opts.tol);
  Expect(rep, "tail_hi(theta) <= tail_hi(phi)",
         et.tail_hi <= ep.tail_hi + opts.tol);
  if (inconclusive) Skip(rep, "overlapping M brackets");
  return rep;
}

LawReport CheckContinuityBound(const Source& source, const Rational& theta,
                               const Rational& phi, const LawOptions& opts) {
  LawReport rep = Start("continuity",
                        fmt::format("{}; theta={}, phi={}",
                                    DescribeSource(source), theta.ToString(),
                                    phi.ToString()),
                        opts.tol);
  if (theta.is_zero() || !(theta < phi)) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < theta < phi");
  }
  const auto et = Estimate(source, theta, opts);
  const auto ep = Estimate(source, phi, opts);
  rep.witness["theta"] = EstimateJson(et);
  rep.witness["phi"] = EstimateJson(ep);
  if (!et.exact || !ep.exact) {
    Skip(rep, "non-exact roots");
    return rep;
  }
  const double ratio = (phi / theta).ToDouble();
  Expect(rep, "tail_hi(theta) <= tail_hi(phi)",
         et.tail_hi <= ep.tail_hi + opts.tol,
         {{"lhs", et.tail_hi}, {"rhs", ep.tail_hi}});
  Expect(rep, "tail_hi(phi) <= (phi/theta) tail_hi(theta)",
         ep.tail_hi <= ratio * et.tail_hi + opts.tol,
         {{"lhs", ep.tail_hi}, {"rhs", ratio * et.tail_hi}});

  const auto* sym = std::get_if<SymbolicSource>(&source);
  if (!sym) return rep;
  int certificates = 0;
  int explicit_covers = 0;
  for (const auto& entry : et.per_n) {
    const LengthWindow w = WindowFor(entry.n, theta, opts);
    const double s = entry.root.hi;
    const auto tree =
        CylinderTree::CanCompress(sym->system, sym->target)
            ? CylinderTree::Compressed(sym->system, sym->target, sym->r,
                                       w.MaxLength())
            : CylinderTree::Explicit(sym->system, sym->target, sym->r,
                                     w.MaxLength(), opts.estimator.caps);
    const TreeSolution sol = tree.Solve(s, w);
    const auto cut = TruncationTransform(sol.histogram, entry.n, theta, phi, s);
    ++certificates;
    Expect(rep, "truncation cost certificate", cut.certified,
           {{"N", entry.n}, {"s", s}, {"t_N", cut.t_n},
            {"before", static_cast<double>(cut.cost_before)},
            {"after", static_cast<double>(cut.cost_after)}});
    // Explicit covers where the projected universe is small.
    const auto coords = DependenceCoords(sym->system, w.MaxLength(), sym->r);
    if (std::pow(sym->system.alphabet().size(),
                 static_cast<double>(coords.size())) > 4096) {
      continue;
    }
    const auto small = CylinderTree::Explicit(sym->system, sym->target, sym->r,
                                              w.MaxLength());
    const TreeSolution full = small.Solve(s, w, true);
    const auto cut2 = TruncationTransform(full.cover, entry.n, theta, phi, s);
    ++explicit_covers;
    Expect(rep, "truncated cover certificate", cut2.certified,
           {{"N", entry.n}, {"strings", full.cover.size()}});
    Expect(rep, "truncated cover still covers Z",
           CoversTarget(sym->system, sym->target, cut2.cover),
           {{"N", entry.n}});
  }
  rep.witness["truncation_certificates"] = certificates;
  rep.witness["explicit_truncations"] = explicit_covers;
  return rep;
}

LawReport CheckFiniteStability(const SymbolicNDS& system, const TargetSet& z1,
                               const TargetSet& z2, int r,
                               const Rational& theta,
                               const std::vector<double>& alphas,
                               const LawOptions& opts) {
  const TargetSet both = TargetSet::Union({z1, z2});
  LawReport rep = Start("finite_stability",
                        fmt::format("{} with r={}; {} u {}; theta={}",
                                    system.ToString(), r, z1.ToString(),
                                    z2.ToString(), theta.ToString()),
                        opts.tol);
  rep.tolerances["m_relative"] = kRelSlack;
  json cells = json::array();
  for (auto n : opts.n_values) {
    const LengthWindow w = WindowFor(n, theta, opts);
    for (double a : alphas) {
      const auto m1 = MValue(SymbolicSource{system, z1, r}, a, w, opts.estimator);
      const auto m2 = MValue(SymbolicSource{system, z2, r}, a, w, opts.estimator);
      const auto mu =
          MValue(SymbolicSource{system, both, r}, a, w, opts.estimator);
      json cell{{"N", n}, {"alpha", a}, {"z1", MJson(m1)}, {"z2", MJson(m2)},
                {"union", MJson(mu)}};
      Expect(rep, "M(union) >= max(M(Z1), M(Z2))",
             mu.hi * (1 + kRelSlack) >= std::max(m1.lo, m2.lo), cell);
      Expect(rep, "M(union) <= M(Z1) + M(Z2)",
             mu.lo <= (m1.hi + m2.hi) * (1 + kRelSlack), cell);
      cells.push_back(std::move(cell));
    }
  }
  rep.witness["m_values"] = std::move(cells);
  const auto e1 = Estimate(system, z1, r, theta, opts);
  const auto e2 = Estimate(system, z2, r, theta, opts);
  const auto eu = Estimate(system, both, r, theta, opts);
  rep.witness["z1"] = EstimateJson(e1);
  rep.witness["z2"] = EstimateJson(e2);
  rep.witness["union"] = EstimateJson(eu);
  Expect(rep, "tail_hi(union) = max of parts",
         std::abs(eu.tail_hi - std::max(e1.tail_hi, e2.tail_hi)) <= opts.tol);
  return rep;
}

LawReport CheckSubsetMonotonicity(const SymbolicNDS& system,
                                  const TargetSet& smaller,
                                  const TargetSet& larger, int r,
                                  const Rational& theta,
                                  const LawOptions& opts) {
  LawReport rep = Start("subset_monotonicity",
                        fmt::format("{} with r={}; {} inside {}; theta={}",
                                    system.ToString(), r, smaller.ToString(),
                                    larger.ToString(), theta.ToString()),
                        opts.tol);
  for (auto n : opts.n_values) {
    const LengthWindow w = WindowFor(n, theta, opts);
    for (double a : DefaultAlphas(system.alphabet().size())) {
      const auto ms =
          MValue(SymbolicSource{system, smaller, r}, a, w, opts.estimator);
      const auto ml =
          MValue(SymbolicSource{system, larger, r}, a, w, opts.estimator);
      Expect(rep, "M(smaller) <= M(larger)",
             ms.lo <= ml.hi * (1 + kRelSlack),
             {{"N", n}, {"alpha", a}, {"smaller", MJson(ms)},
              {"larger", MJson(ml)}});
    }
  }
  const auto es = Estimate(system, smaller, r, theta, opts);
  const auto el = Estimate(system, larger, r, theta, opts);
  rep.witness["smaller"] = EstimateJson(es);
  rep.witness["larger"] = EstimateJson(el);
  Expect(rep, "tail_lo monotone", es.tail_lo <= el.tail_lo + opts.tol);
  Expect(rep, "tail_hi monotone", es.tail_hi <= el.tail_hi + opts.tol);
  return rep;
}

LawReport CheckRefinement(const SymbolicNDS& system, const TargetSet& target,
                          const std::vector<int>& radii, const Rational& theta,
                          const LawOptions& opts) {
  LawReport rep = Start("refinement",
                        fmt::format("{} on {}; radii {}; theta={}",
                                    system.ToString(), target.ToString(),
                                    fmt::join(radii, ","), theta.ToString()),
                        opts.tol);
  std::vector<EntropyEstimate> ests;
  for (int r : radii) {
    ests.push_back(Estimate(system, target, r, theta, opts));
    rep.witness["r=" + std::to_string(r)] = EstimateJson(ests.back());
  }
  for (std::size_t i = 1; i < ests.size(); ++i) {
    Expect(rep, "tail_lo nondecreasing in r",
           ests[i - 1].tail_lo <= ests[i].tail_lo + opts.tol,
           {{"r", radii[i]}});
    Expect(rep, "tail_hi nondecreasing in r",
           ests[i - 1].tail_hi <= ests[i].tail_hi + opts.tol,
           {{"r", radii[i]}});
  }
  return rep;
}

LawReport CheckClosureStability(const SymbolicNDS& system, Symbol tail, int r,
                                const Rational& theta,
                                const std::vector<std::int64_t>& k_values,
                                const LawOptions& opts, ClosureSweep* sweep) {
  LawReport rep = Start("closure_stability",
                        fmt::format("{} with r={}; Z_k tail {}; theta={}",
                                    system.ToString(), r, tail,
                                    theta.ToString()),
                        opts.tol);
  const auto whole = Estimate(system, TargetSet::Whole(), r, theta, opts);
  rep.witness["whole"] = EstimateJson(whole);
  std::int64_t depth = 1;
  for (auto n : opts.n_values) {
    depth = std::max(depth, WindowFor(n, theta, opts).MaxLength());
  }
  const auto coords = DependenceCoords(system, depth, r);
  const std::int64_t reach =
      std::max(std::abs(coords.front()), std::abs(coords.back()));
  ClosureSweep result;
  result.expected = reach + 1;

  std::vector<bool> identical(k_values.size());
  json rows = json::array();
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    const auto e = Estimate(system, TargetSet::EventuallyConstant(tail, k_values[i]),
                            r, theta, opts);
    identical[i] = SameRoots(e, whole);
    bool below = true;
    bool strict = false;
    for (std::size_t j = 0; j < e.per_n.size(); ++j) {
      below = below && e.per_n[j].root.hi <= whole.per_n[j].root.hi;
      strict = strict || e.per_n[j].root.hi < whole.per_n[j].root.lo;
    }
    rows.push_back({{"k_max", k_values[i]}, {"identical", identical[i]},
                    {"tail_hi", e.tail_hi}});
    Expect(rep, "family roots never exceed whole-space roots", below,
           {{"k_max", k_values[i]}});
    if (k_values[i] >= result.expected) {
      Expect(rep, "bit-identical roots beyond the threshold", identical[i],
             {{"k_max", k_values[i]}, {"estimate", EstimateJson(e)}});
    } else {
      Expect(rep, "strictly smaller roots below the threshold", strict,
             {{"k_max", k_values[i]}, {"estimate", EstimateJson(e)}});
    }
  }
  for (std::size_t i = k_values.size(); i-- > 0;) {
    if (!identical[i]) break;
    result.threshold = k_values[i];
  }
  rep.witness["family"] = std::move(rows);
  rep.witness["threshold"] = result.threshold;
  rep.witness["expected_threshold"] = result.expected;
  rep.witness["max_abs_coordinate"] = reach;
  const bool spans = !k_values.empty() && k_values.front() < result.expected &&
                     k_values.back() >= result.expected;
  if (spans) {
    Expect(rep, "threshold equals max|J| + 1",
           result.threshold == result.expected);
  } else {
    Skip(rep, "k sweep does not straddle the expected threshold");
  }
  if (sweep) *sweep = result;
  return rep;
}

LawReport CheckPowerRule(const SymbolicNDS& system, std::int64_t m,
                         const TargetSet& target, const Rational& theta,
                         const LawOptions& opts) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "power must be >= 1");
  const int rm = static_cast<int>(m - 1);
  LawReport rep = Start("power_rule",
                        fmt::format("{} on {}; m={}; theta={}",
                                    system.ToString(), target.ToString(), m,
                                    theta.ToString()),
                        opts.tol);
  const SymbolicNDS power = PowerSystem(system, m);
  const auto ep = Estimate(power, target, rm, theta, opts);
  const auto eb = Estimate(system, target, rm, theta, opts);
  const auto e0 = Estimate(system, target, 0, theta, opts);
  rep.witness["radius"] = rm;
  rep.witness["power"] = EstimateJson(ep);
  rep.witness["base_same_radius"] = EstimateJson(eb);
  rep.witness["base_r0"] = EstimateJson(e0);
  const double md = static_cast<double>(m);
  Expect(rep, "tail_hi(power) <= m tail_hi(base)",
         ep.tail_hi <= md * eb.tail_hi + opts.tol,
         {{"lhs", ep.tail_hi}, {"rhs", md * eb.tail_hi}});
  Expect(rep, "tail_lo(power) <= m tail_lo(base)",
         ep.tail_lo <= md * eb.tail_lo + opts.tol,
         {{"lhs", ep.tail_lo}, {"rhs", md * eb.tail_lo}});
  const bool periodic =
      system.preperiod().empty() &&
      m % static_cast<std::int64_t>(system.period().size()) == 0;
  rep.witness["periodic_with_period_dividing_m"] = periodic;
  if (periodic) {
    // Finite-N slack: the radius-r_m cylinders pin 2 r_m + 1 extra symbols.
    const double eq_tol = (2.0 * rm + 1.0) *
                          std::log(system.alphabet().size()) /
                          static_cast<double>(opts.n_values.front());
    rep.tolerances["equality"] = eq_tol;
    Expect(rep, "tail_hi(power) = m tail_hi(base, r=0)",
           std::abs(ep.tail_hi - md * e0.tail_hi) <= eq_tol + opts.tol,
           {{"lhs", ep.tail_hi}, {"rhs", md * e0.tail_hi}});
  }
  return rep;
}

LawReport CheckShiftLemma(const SymbolicNDS& system, const TargetSet& target,
                          std::int64_t k, int r, const Rational& theta,
                          const LawOptions& opts) {
  LawReport rep = Start("shift_lemma",
                        fmt::format("{} on {}; k={}; r={}; theta={}",
                                    system.ToString(), target.ToString(), k, r,
                                    theta.ToString()),
                        opts.tol);
  TargetSet image;
  try {
    image = MapImage(target, system.map(k), system.alphabet());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotShiftSystem) throw;
    Skip(rep, "image of Z not computable for block codes");
    return rep;
  }
  const auto left = Estimate(TailSystem(system, k), target, r, theta, opts);
  const auto right = Estimate(TailSystem(system, k + 1), image, r, theta, opts);
  rep.witness["image"] = image.ToString();
  rep.witness["left"] = EstimateJson(left);
  rep.witness["right"] = EstimateJson(right);
  rep.witness["bit_identical"] = SameRoots(left, right);
  Expect(rep, "per-N roots agree", MaxRootGap(left, right) <= opts.tol,
         {{"gap", MaxRootGap(left, right)}});
  return rep;
}

LawReport CheckInvarianceCorollaries(const SymbolicNDS& system,
                                     const TargetSet& target,
                                     Invariance invariance, std::int64_t i,
                                     std::int64_t j, int r,
                                     const Rational& theta,
                                     const LawOptions& opts) {
  static const char* kNames[] = {"forward", "backward", "invariant"};
  LawReport rep = Start(
      "invariance",
      fmt::format("{} on {} ({}); i={}, j={}; theta={}", system.ToString(),
                  target.ToString(), kNames[static_cast<int>(invariance)], i,
                  j, theta.ToString()),
      opts.tol);
  if (i < 1 || j < i) throw Error(ErrorCode::kInvalidArgument, "need 1 <= i <= j");
  const auto ei = Estimate(TailSystem(system, i), target, r, theta, opts);
  const auto ej = Estimate(TailSystem(system, j), target, r, theta, opts);
  rep.witness["i"] = EstimateJson(ei);
  rep.witness["j"] = EstimateJson(ej);
  const bool le = invariance != Invariance::kBackward;
  const bool ge = invariance != Invariance::kForward;
  if (le) {
    Expect(rep, "tail_lo(i) <= tail_lo(j)", ei.tail_lo <= ej.tail_lo + opts.tol);
    Expect(rep, "tail_hi(i) <= tail_hi(j)", ei.tail_hi <= ej.tail_hi + opts.tol);
  }
  if (ge) {
    Expect(rep, "tail_lo(i) >= tail_lo(j)", ei.tail_lo + opts.tol >= ej.tail_lo);
    Expect(rep, "tail_hi(i) >= tail_hi(j)", ei.tail_hi + opts.tol >= ej.tail_hi);
  }
  return rep;
}

namespace {

// Roots and M brackets at a few alphas, compared bit for bit.
bool SameBrackets(const Source& a, const Source& b, const Rational& theta,
                  const LawOptions& opts, json* cells) {
  bool same = true;
  for (auto n : opts.n_values) {
    const LengthWindow w = WindowFor(n, theta, opts);
    for (double alpha : DefaultAlphas(AlphabetOf(a))) {
      const auto ma = MValue(a, alpha, w, opts.estimator);
      const auto mb = MValue(b, alpha, w, opts.estimator);
      const bool eq = ma.lo == mb.lo && ma.hi == mb.hi;
      same = same && eq;
      cells->push_back(
          {{"N", n}, {"alpha", alpha}, {"a", MJson(ma)}, {"b", MJson(mb)},
           {"identical", eq}});
    }
  }
  return same;
}

}  // namespace

LawReport CheckCommutation(const Alphabet& alphabet, const MapSpec& f1,
                           const MapSpec& f2, const TargetSet& target, int r,
                           const Rational& theta, const LawOptions& opts) {
  LawReport rep = Start("commutation",
                        fmt::format("f1={}, f2={} on {}; r={}; theta={}",
                                    f1.ToString(), f2.ToString(),
                                    target.ToString(), r, theta.ToString()),
                        opts.tol);
  const auto s12 = SymbolicNDS::Constant(alphabet, MapSpec::Compose(f1, f2));
  const auto s21 = SymbolicNDS::Constant(alphabet, MapSpec::Compose(f2, f1));
  const auto e12 = Estimate(s12, target, r, theta, opts);
  const auto e21 = Estimate(s21, target, r, theta, opts);
  rep.witness["f1_after_f2"] = EstimateJson(e12);
  rep.witness["f2_after_f1"] = EstimateJson(e21);
  json cells = json::array();
  const bool same_m = SameBrackets(SymbolicSource{s12, target, r},
                                   SymbolicSource{s21, target, r}, theta, opts,
                                   &cells);
  rep.witness["m_values"] = std::move(cells);
  rep.witness["bit_identical"] = same_m && SameRoots(e12, e21);
  Expect(rep, "per-N roots agree", MaxRootGap(e12, e21) <= opts.tol,
         {{"gap", MaxRootGap(e12, e21)}});
  return rep;
}

LawReport CheckProductBounds(const SymbolicSource& a, const SymbolicSource& b,
                             const Rational& theta, const LawOptions& opts) {
  LawReport rep = Start("product_bounds",
                        fmt::format("({}) x ({}); theta={}",
                                    DescribeSource(a), DescribeSource(b),
                                    theta.ToString()),
                        opts.tol);
  if (a.r != b.r) throw Error(ErrorCode::kInvalidArgument, "radii differ");
  const SymbolicSource prod{
      ProductSystem(a.system, b.system),
      ProductTarget(a.target, a.system.alphabet(), b.target,
                    b.system.alphabet()),
      a.r};
  const auto ea = Estimate(a, theta, opts);
  const auto eb = Estimate(b, theta, opts);
  const auto ep = Estimate(prod, theta, opts);
  const auto cap = CapacityEntropy(b, opts.n_values, opts.estimator);
  double cap_tail = 0;
  json cap_rows = json::array();
  for (std::size_t i = 0; i < cap.size(); ++i) {
    cap_rows.push_back({cap[i].n, cap[i].value});
    if (i >= cap.size() / 2) cap_tail = std::max(cap_tail, cap[i].value);
  }
  rep.witness["z"] = EstimateJson(ea);
  rep.witness["w"] = EstimateJson(eb);
  rep.witness["product"] = EstimateJson(ep);
  rep.witness["capacity_w"] = std::move(cap_rows);
  rep.witness["capacity_tail_w"] = cap_tail;
  Expect(rep, "max lower bound (tail_hi)",
         std::max(ea.tail_hi, eb.tail_hi) - opts.tol <= ep.tail_hi,
         {{"lhs", std::max(ea.tail_hi, eb.tail_hi)}, {"rhs", ep.tail_hi}});
  Expect(rep, "max lower bound (tail_lo)",
         std::max(ea.tail_lo, eb.tail_lo) - opts.tol <= ep.tail_lo,
         {{"lhs", std::max(ea.tail_lo, eb.tail_lo)}, {"rhs", ep.tail_lo}});
  Expect(rep, "sum upper bound",
         ep.tail_hi <= ea.tail_hi + cap_tail + opts.tol,
         {{"lhs", ep.tail_hi}, {"rhs", ea.tail_hi + cap_tail}});
  return rep;
}

LawReport CheckConjugacy(const SymbolicSource& source,
                         const std::vector<Symbol>& perm,
                         const Rational& theta, const LawOptions& opts) {
  LawReport rep = Start("conjugacy",
                        fmt::format("{}; perm [{}]; theta={}",
                                    DescribeSource(source),
                                    fmt::join(perm, ","), theta.ToString()),
                        opts.tol);
  const auto [system2, relabel] = RelabelSystem(source.system, perm);
  const SymbolicSource image{system2, relabel(source.target), source.r};
  const auto e1 = Estimate(source, theta, opts);
  const auto e2 = Estimate(image, theta, opts);
  rep.witness["source"] = EstimateJson(e1);
  rep.witness["relabeled"] = EstimateJson(e2);
  rep.witness["relabeled_target"] = image.target.ToString();
  json cells = json::array();
  const bool same_m = SameBrackets(source, image, theta, opts, &cells);
  rep.witness["m_values"] = std::move(cells);
  const bool same_roots = SameRoots(e1, e2);
  rep.witness["bit_identical"] = same_m && same_roots;
  Expect(rep, "bit-identical M brackets", same_m);
  Expect(rep, "bit-identical roots", same_roots);
  return rep;
}

namespace {

// Whether every word of length w <= max_w is an image word of the code.
bool CodeOntoWords(const MapSpec& code, int alphabet, int max_w) {
  const Coord lo = code.window_lo();
  const Coord span = code.window_hi() - lo;
  for (int w = 1; w <= max_w; ++w) {
    const int len = w + static_cast<int>(span);
    std::set<Word> images;
    Word input(static_cast<std::size_t>(len), 0);
    while (true) {
      Word out;
      for (int t = 0; t < w; ++t) {
        // Output coordinate t reads input coordinates t+lo..t+hi, stored at
        // offsets t..t+span.
        out.push_back(code.EvalOnWord(input, lo - t));
      }
      images.insert(out);
      int i = len - 1;
      while (i >= 0 && ++input[static_cast<std::size_t>(i)] == alphabet) {
        input[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
    if (images.size() != static_cast<std::size_t>(std::pow(alphabet, w))) {
      return false;
    }
  }
  return true;
}

// Preimages of y among points with constant tails and a core in [-w, w].
std::vector<TailedPoint> Fiber(const MapSpec& code, int alphabet,
                               const TailedPoint& y, int w) {
  std::set<TailedPoint> found;
  const int len = 2 * w + 1;
  for (int left = 0; left < alphabet; ++left) {
    for (int right = 0; right < alphabet; ++right) {
      Word core(static_cast<std::size_t>(len), 0);
      while (true) {
        const TailedPoint x(static_cast<Symbol>(left),
                            static_cast<Symbol>(right), core, -w);
        if (code.Apply(x) == y) found.insert(x);
        int i = len - 1;
        while (i >= 0 && ++core[static_cast<std::size_t>(i)] == alphabet) {
          core[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

LawReport CheckFactorInequality(const SymbolicNDS& system, const MapSpec& code,
                                const TargetSet& target, int r,
                                const Rational& theta, const LawOptions& opts) {
  LawReport rep = Start("factor",
                        fmt::format("{} on {}; code {}; r={}; theta={}",
                                    system.ToString(), target.ToString(),
                                    code.ToString(), r, theta.ToString()),
                        opts.tol);
  const int a = system.alphabet().size();
  const bool constant_shift = system.all_shift() &&
                              system.preperiod().empty() &&
                              system.period().size() == 1;
  if (target.kind() != TargetSet::Kind::kWhole || !constant_shift ||
      code.is_shift()) {
    Skip(rep, "image set not computable in the target vocabulary");
    return rep;
  }
  if (!CodeOntoWords(code, a, 6)) {
    Skip(rep, "code is not onto on words up to length 6");
    return rep;
  }
  rep.witness["image"] = "whole space (onto on words up to length 6)";
  const auto src = Estimate(system, target, r, theta, opts);
  const auto img = Estimate(system, TargetSet::Whole(), r, theta, opts);
  rep.witness["source"] = EstimateJson(src);
  rep.witness["image_estimate"] = EstimateJson(img);
  Expect(rep, "tail_lo(source) >= tail_lo(image)",
         src.tail_lo + opts.tol >= img.tail_lo);
  Expect(rep, "tail_hi(source) >= tail_hi(image)",
         src.tail_hi + opts.tol >= img.tail_hi);

  // Fibers over the constant points and the single-defect points.
  std::vector<TailedPoint> ys;
  for (int s = 0; s < a; ++s) {
    ys.push_back(TailedPoint::Constant(static_cast<Symbol>(s)));
    for (int t = 0; t < a; ++t) {
      if (t != s) {
        ys.emplace_back(static_cast<Symbol>(s), static_cast<Symbol>(s),
                        Word{static_cast<Symbol>(t)}, 0);
      }
    }
  }
  const std::int64_t step = system.map(1).step();
  const std::vector<double> eps_list{0.5, 0.25};
  double fiber_term = 0;
  json fibers = json::array();
  CountLimits limits;
  limits.require_exact = true;
  for (const auto& y : ys) {
    const auto fiber = Fiber(code, a, y, 3);
    if (fiber.empty()) continue;
    std::vector<std::size_t> index;
    const auto orbit = ShiftOrbitSystem(fiber, step, 8, &index);
    const auto table =
        SupEntropyEstimate(orbit, index, opts.n_values, eps_list, limits);
    json rows = json::array();
    for (const auto& cell : table) {
      rows.push_back({cell.eps, cell.n, cell.count.value, cell.value});
      const double bound =
          std::log(static_cast<double>(fiber.size())) / cell.n + 1e-12;
      Expect(rep, "fiber sup-entropy at most log|fiber| / n",
             cell.value <= bound, {{"y", y.ToString()}, {"n", cell.n}});
      if (cell.n == opts.n_values.back()) {
        fiber_term = std::max(fiber_term, cell.value);
      }
    }
    fibers.push_back(
        {{"y", y.ToString()}, {"size", fiber.size()}, {"table", rows}});
  }
  rep.witness["fibers"] = std::move(fibers);
  rep.witness["fiber_term"] = fiber_term;
  Expect(rep, "tail_hi(source) <= tail_hi(image) + fiber term",
         src.tail_hi <= img.tail_hi + fiber_term + opts.tol);
  return rep;
}

LawReport CheckBillingsley(const SymbolicNDS& system,
                           const BernoulliMeasure& mu, const TargetSet& target,
                           const std::vector<TailedPoint>& samples, int r,
                           const Rational& theta, const LawOptions& opts) {
  LawReport rep = Start("billingsley",
                        fmt::format("{} on {}; p=[{}]; r={}; theta={}",
                                    system.ToString(), target.ToString(),
                                    fmt::join(mu.p(), ","), r,
                                    theta.ToString()),
                        opts.tol);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  json seqs = json::array();
  for (const auto& x : samples) {
    const auto seq = LocalEntropySequence(mu, system, x, opts.n_values, r);
    for (double v : seq) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    seqs.push_back({{"x", x.ToString()}, {"values", seq}});
  }
  rep.witness["local_entropy"] = std::move(seqs);
  if (samples.empty() || hi - lo > 1e-12) {
    Skip(rep, "local entropy is not constant over the samples");
    return rep;
  }
  const double s = hi;
  rep.witness["s"] = s;
  const auto est = Estimate(system, target, r, theta, opts);
  rep.witness["estimate"] = EstimateJson(est);
  Expect(rep, "tail_hi <= s", est.tail_hi <= s + opts.tol,
         {{"tail_hi", est.tail_hi}, {"s", s}});
  // The lower bound needs mu(Z) > 0: some component with unconstrained tails.
  bool positive = false;
  const SymbolMask full = FullMask(system.alphabet().size());
  for (const auto& c : target.Components(system.alphabet())) {
    positive = positive || (c.left == full && c.right == full);
  }
  rep.witness["mu_z_positive"] = positive;
  if (positive) {
    Expect(rep, "tail_lo >= s", est.tail_lo >= s - opts.tol,
           {{"tail_lo", est.tail_lo}, {"s", s}});
  } else {
    rep.witness["lower_bound"] = "not applicable: mu(Z) = 0";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Suite

MapSpec XorCode() { return MapSpec::Code(2, 0, 1, {0, 1, 1, 0}); }

SymbolicNDS ExampleSystem() {
  return SymbolicNDS::Steps(Alphabet(2), {2}, {1});
}

namespace {

MetricSource RandomMetricSource(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t p = 5;
  std::vector<double> where(p);
  for (auto& v : where) v = static_cast<double>(rng() % 1000) / 1000.0;
  std::vector<std::vector<double>> d(p, std::vector<double>(p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) d[i][j] = std::abs(where[i] - where[j]);
  }
  FiniteMetricNDS::IndexMap f(p);
  FiniteMetricNDS::IndexMap g(p);
  for (auto& v : f) v = rng() % p;
  for (auto& v : g) v = rng() % p;
  return MetricSource{FiniteMetricNDS(std::move(d), {f}, {g}), {0, 1, 2}, 0.3};
}

}  // namespace

std::vector<SuiteEntry> DefaultSuite(const LawOptions& options) {
  const Alphabet two(2);
  const SymbolicNDS ex = ExampleSystem();
  const SymbolicNDS sigma = SymbolicNDS::Steps(two, {}, {1});
  const TargetSet whole = TargetSet::Whole();
  const TargetSet z2 = TargetSet::EventuallyConstant(1, 2);
  const TargetSet z3 = TargetSet::EventuallyConstant(1, 3);
  const TargetSet big = TargetSet::EventuallyConstant(1, 64);
  const TargetSet ones = TargetSet::Points({TailedPoint::Constant(1)});
  const Rational one(1, 1), half(1, 2), quarter(1, 4);
  const MapSpec shift1 = MapSpec::Shift(1);
  const MapSpec shift2 = MapSpec::Shift(2);
  const MapSpec swap = MapSpec::Code(2, 0, 0, {1, 0});
  const MapSpec ident = MapSpec::Code(2, 0, 0, {0, 1});

  LawOptions codes = options;
  codes.n_values = NRange(2, 5);
  LawOptions product = options;
  product.n_values = NRange(3, 7);

  std::vector<SuiteEntry> suite;
  auto add = [&](std::string law, std::string instance,
                 std::function<LawReport()> run) {
    suite.push_back({std::move(law), std::move(instance), std::move(run)});
  };
  const auto o = options;

  add("theta_monotonicity", "whole space, 1/2 vs 1", [=] {
    return CheckThetaMonotonicity(SymbolicSource{ex, whole, 0}, half, one,
                                  DefaultAlphas(2), o);
  });
  add("theta_monotonicity", "Z_2, 1/4 vs 1", [=] {
    return CheckThetaMonotonicity(SymbolicSource{ex, z2, 0}, quarter, one,
                                  DefaultAlphas(2), o);
  });
  add("theta_monotonicity", "random metric system, 1/2 vs 1", [=] {
    return CheckThetaMonotonicity(RandomMetricSource(7), half, one,
                                  {0.0, 0.5, 1.0}, codes);
  });

  for (auto [t, p] : {std::pair{quarter, half}, std::pair{half, one}}) {
    add("continuity", "whole space " + t.ToString() + "/" + p.ToString(),
        [=] { return CheckContinuityBound(SymbolicSource{ex, whole, 0}, t, p, o); });
    add("continuity", "Z(k_max=64) " + t.ToString() + "/" + p.ToString(),
        [=] { return CheckContinuityBound(SymbolicSource{ex, big, 0}, t, p, o); });
  }
  add("continuity", "singleton 1/2/1", [=] {
    return CheckContinuityBound(SymbolicSource{ex, ones, 0}, half, one, o);
  });

  add("finite_stability", "Z_2 u Z_3", [=] {
    return CheckFiniteStability(ex, z2, z3, 0, half, DefaultAlphas(2), o);
  });
  add("finite_stability", "whole u Z_2", [=] {
    return CheckFiniteStability(ex, whole, z2, 0, half, DefaultAlphas(2), o);
  });
  add("finite_stability", "Z_2 u Z_2", [=] {
    return CheckFiniteStability(ex, z2, z2, 0, half, DefaultAlphas(2), o);
  });

  add("subset_monotonicity", "Z_2 inside Z_3",
      [=] { return CheckSubsetMonotonicity(ex, z2, z3, 0, half, o); });
  add("subset_monotonicity", "Z_3 inside whole",
      [=] { return CheckSubsetMonotonicity(ex, z3, whole, 0, half, o); });

  add("refinement", "sigma on whole, r=0..2",
      [=] { return CheckRefinement(sigma, whole, {0, 1, 2}, half, o); });
  add("refinement", "example on Z_3, r=0..1",
      [=] { return CheckRefinement(ex, z3, {0, 1}, half, o); });

  for (const Rational& t : {half, one}) {
    add("closure_stability", "example, theta=" + t.ToString(), [=] {
      std::int64_t depth = 1;
      for (auto n : o.n_values) {
        depth = std::max(depth, LengthWindow(n, t).MaxLength());
      }
      return CheckClosureStability(ex, 1, 0, t, NRange(1, depth + 3), o);
    });
  }

  for (std::int64_t m : {1, 2, 3}) {
    add("power_rule", fmt::format("sigma, m={}", m),
        [=] { return CheckPowerRule(sigma, m, whole, half, o); });
  }
  add("power_rule", "example, m=2",
      [=] { return CheckPowerRule(ex, 2, whole, half, o); });

  add("shift_lemma", "example, k=1, whole",
      [=] { return CheckShiftLemma(ex, whole, 1, 0, half, o); });
  add("shift_lemma", "example, k=1, Z(k_max=64)",
      [=] { return CheckShiftLemma(ex, big, 1, 0, half, o); });
  add("shift_lemma", "example, k=3, whole",
      [=] { return CheckShiftLemma(ex, whole, 3, 0, half, o); });

  ProductComponent half_line{5, {}, FullMask(2), SymbolMask{1} << 1};
  const TargetSet forward = TargetSet::Product(half_line);
  add("invariance", "whole space, i=1, j=2", [=] {
    return CheckInvarianceCorollaries(ex, whole, Invariance::kInvariant, 1, 2,
                                      0, half, o);
  });
  add("invariance", "half-line set, i=1, j=2", [=] {
    return CheckInvarianceCorollaries(ex, forward, Invariance::kForward, 1, 2,
                                      0, half, o);
  });
  add("invariance", "i=j", [=] {
    return CheckInvarianceCorollaries(ex, z3, Invariance::kInvariant, 1, 1, 0,
                                      half, o);
  });

  add("commutation", "sigma, sigma^2", [=] {
    return CheckCommutation(two, shift1, shift2, whole, 0, half, o);
  });
  add("commutation", "sigma, symbol swap", [=] {
    return CheckCommutation(two, shift1, swap, whole, 0, half, codes);
  });
  add("commutation", "xor, xor", [=] {
    return CheckCommutation(two, XorCode(), XorCode(), whole, 0, one, codes);
  });
  add("commutation", "symbol swap, xor", [=] {
    return CheckCommutation(two, swap, XorCode(), whole, 0, half, codes);
  });

  add("product_bounds", "full x full", [=] {
    return CheckProductBounds(SymbolicSource{sigma, whole, 0},
                              SymbolicSource{sigma, whole, 0}, half, product);
  });
  add("product_bounds", "full x singleton", [=] {
    return CheckProductBounds(SymbolicSource{sigma, whole, 0},
                              SymbolicSource{sigma, ones, 0}, half, product);
  });
  add("product_bounds", "Z(k_max=64) x full", [=] {
    return CheckProductBounds(SymbolicSource{ex, big, 0},
                              SymbolicSource{ex, whole, 0}, half, product);
  });

  add("conjugacy", "swap, whole", [=] {
    return CheckConjugacy(SymbolicSource{ex, whole, 0}, {1, 0}, half, o);
  });
  add("conjugacy", "swap, Z_3", [=] {
    return CheckConjugacy(SymbolicSource{ex, z3, 0}, {1, 0}, half, o);
  });
  add("conjugacy", "identity, Z_3", [=] {
    return CheckConjugacy(SymbolicSource{ex, z3, 0}, {0, 1}, half, o);
  });

  add("factor", "xor",
      [=] { return CheckFactorInequality(sigma, XorCode(), whole, 0, half, o); });
  add("factor", "identity code",
      [=] { return CheckFactorInequality(sigma, ident, whole, 0, half, o); });
  add("factor", "symbol swap",
      [=] { return CheckFactorInequality(sigma, swap, whole, 0, half, o); });

  const std::vector<TailedPoint> samples{
      TailedPoint::Constant(0), TailedPoint::Constant(1),
      TailedPoint(0, 1, {1, 0, 1}, -1), TailedPoint(1, 0, {0, 0, 1, 1}, 2)};
  const BernoulliMeasure uniform = BernoulliMeasure::Uniform(2);
  add("billingsley", "uniform, sigma, whole", [=] {
    return CheckBillingsley(sigma, uniform, whole, samples, 0, half, o);
  });
  add("billingsley", "uniform, example, whole", [=] {
    return CheckBillingsley(ex, uniform, whole, samples, 0, half, o);
  });
  add("billingsley", "uniform, sigma, singleton", [=] {
    return CheckBillingsley(sigma, uniform, ones, samples, 0, half, o);
  });
  return suite;
}

std::vector<LawReport> RunSuite(const std::vector<SuiteEntry>& suite,
                                const std::string& filter, int jobs) {
  std::vector<const SuiteEntry*> selected;
  for (const auto& e : suite) {
    if (filter.empty() || e.law.find(filter) != std::string::npos) {
      selected.push_back(&e);
    }
  }
  std::vector<LawReport> reports(selected.size());
  ParallelFor(selected.size(), jobs, [&](std::size_t i) {
    try {
      reports[i] = selected[i]->run();
    } catch (const Error& e) {
      LawReport rep;
      rep.law = selected[i]->law;
      rep.instance = selected[i]->instance;
      rep.verdict = Verdict::kFail;
      rep.witness["error"] = e.what();
      rep.witness["error_code"] = ErrorCodeName(e.code());
      reports[i] = std::move(rep);
    }
  });
  return reports;
}

}  // namespace ite
