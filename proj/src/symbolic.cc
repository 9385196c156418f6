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

#include "ite/symbolic.h"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "ite/error.h"

namespace ite {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet size must be >= 2");
  }
}

TailedPoint::TailedPoint(Symbol left_tail, Symbol right_tail, Word core,
                         Coord core_start)
    : left_(left_tail),
      right_(right_tail),
      core_(std::move(core)),
      start_(core_start) {
  std::size_t first = 0;
  while (first < core_.size() && core_[first] == left_) ++first;
  std::size_t last = core_.size();
  while (last > first && core_[last - 1] == right_) --last;
  core_ = Word(core_.begin() + first, core_.begin() + last);
  start_ += static_cast<Coord>(first);
  if (core_.empty()) {
    // The switch position of an empty core only matters when tails differ.
    if (left_ == right_) start_ = 0;
  }
}

Symbol TailedPoint::coord(Coord n) const {
  if (n < start_) return left_;
  if (n >= core_end()) return right_;
  return core_[static_cast<std::size_t>(n - start_)];
}

TailedPoint TailedPoint::Shifted(Coord k) const {
  return TailedPoint(left_, right_, core_, start_ - k);
}

TailedPoint TailedPoint::WithCoord(Coord n, Symbol s) const {
  const Coord lo = std::min(start_, n);
  const Coord hi = std::max(core_end(), n + 1);
  Word w = Window(lo, hi - 1);
  w[static_cast<std::size_t>(n - lo)] = s;
  return TailedPoint(left_, right_, std::move(w), lo);
}

Word TailedPoint::Window(Coord lo, Coord hi) const {
  Word w;
  if (hi < lo) return w;
  w.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Coord n = lo; n <= hi; ++n) w.push_back(coord(n));
  return w;
}

std::string TailedPoint::ToString() const {
  std::string core;
  for (Symbol s : core_) core += fmt::format("{}", s);
  return fmt::format("({})^inf [{}@{}] ({})^inf", left_, core, start_,
                     right_);
}

// ---------------------------------------------------------------------------
// MapSpec

MapSpec MapSpec::Shift(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "shift step must be >= 1");
  MapSpec m;
  m.shift_ = k;
  return m;
}

MapSpec MapSpec::Code(int alphabet, Coord lo, Coord hi,
                      std::vector<Symbol> table) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "code window hi < lo");
  if (alphabet < 2) {
    throw Error(ErrorCode::kInvalidArgument, "code alphabet must be >= 2");
  }
  std::size_t expect = 1;
  for (Coord i = lo; i <= hi; ++i) {
    expect *= static_cast<std::size_t>(alphabet);
    if (expect > (1u << 24)) {
      throw Error(ErrorCode::kInvalidArgument, "code table too large");
    }
  }
  if (table.size() != expect) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("code table has {} entries, expected {}",
                            table.size(), expect));
  }
  for (Symbol s : table) {
    if (s >= alphabet) {
      throw Error(ErrorCode::kInvalidArgument, "code table symbol out of range");
    }
  }
  MapSpec m;
  m.parts_.push_back(CodePart{lo, hi, alphabet, std::move(table)});
  m.Normalize();
  return m;
}

void MapSpec::Normalize() {
  if (parts_.empty()) return;
  // Shifts commute with codes; keep every part after the first anchored at
  // lo = 0 and carry the accumulated offset on the first part.
  Coord carry = shift_;
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    carry += parts_[i].lo;
    parts_[i].hi -= parts_[i].lo;
    parts_[i].lo = 0;
  }
  parts_[0].lo += carry;
  parts_[0].hi += carry;
  shift_ = 0;
}

MapSpec MapSpec::Compose(const MapSpec& outer, const MapSpec& inner) {
  MapSpec m;
  if (outer.is_shift() && inner.is_shift()) {
    m.shift_ = outer.shift_ + inner.shift_;
    return m;
  }
  m.parts_ = inner.parts_;
  m.parts_.insert(m.parts_.end(), outer.parts_.begin(), outer.parts_.end());
  m.shift_ = inner.shift_ + outer.shift_;
  if (m.parts_.size() > static_cast<std::size_t>(kMaxChainDepth)) {
    throw Error(ErrorCode::kCapExceeded, "block-code composition too deep");
  }
  m.Normalize();
  return m;
}

Coord MapSpec::window_lo() const {
  if (is_shift()) return shift_;
  Coord lo = 0;
  for (const auto& p : parts_) lo += p.lo;
  return lo;
}

Coord MapSpec::window_hi() const {
  if (is_shift()) return shift_;
  Coord hi = 0;
  for (const auto& p : parts_) hi += p.hi;
  return hi;
}

TailedPoint MapSpec::ApplyPart(const CodePart& part, const TailedPoint& x) {
  const std::size_t width = static_cast<std::size_t>(part.hi - part.lo + 1);
  auto eval = [&](Coord n) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < width; ++i) {
      index = index * static_cast<std::size_t>(part.base) +
              x.coord(n + part.lo + static_cast<Coord>(i));
    }
    return part.table[index];
  };
  std::size_t left_index = 0;
  std::size_t right_index = 0;
  for (std::size_t i = 0; i < width; ++i) {
    left_index = left_index * part.base + x.left_tail();
    right_index = right_index * part.base + x.right_tail();
  }
  const Coord lo = x.core_start() - part.hi;
  const Coord hi = x.core_end() - part.lo;  // exclusive
  Word core;
  for (Coord n = lo; n < hi; ++n) core.push_back(eval(n));
  return TailedPoint(part.table[left_index], part.table[right_index],
                     std::move(core), lo);
}

TailedPoint MapSpec::Apply(const TailedPoint& x) const {
  if (is_shift()) return x.Shifted(shift_);
  TailedPoint y = x;
  for (const auto& part : parts_) y = ApplyPart(part, y);
  return y;
}

Symbol MapSpec::EvalOnWord(const Word& word, Coord word_lo) const {
  if (window_lo() < word_lo ||
      window_hi() > word_lo + static_cast<Coord>(word.size()) - 1) {
    throw Error(ErrorCode::kInvalidArgument, "word does not cover window");
  }
  if (is_shift()) return word[static_cast<std::size_t>(shift_ - word_lo)];
  return Apply(TailedPoint(0, 0, word, word_lo)).coord(0);
}

MapSpec MapSpec::Relabeled(const std::vector<Symbol>& perm) const {
  if (is_shift()) return *this;
  std::vector<Symbol> inverse(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) inverse[perm[a]] = Symbol(a);
  MapSpec m = *this;
  for (auto& part : m.parts_) {
    const std::size_t width = static_cast<std::size_t>(part.hi - part.lo + 1);
    std::vector<Symbol> table(part.table.size());
    for (std::size_t index = 0; index < table.size(); ++index) {
      // Decode, apply p^-1 digitwise, re-encode.
      std::size_t rest = index;
      std::size_t mapped = 0;
      std::size_t weight = 1;
      for (std::size_t i = 0; i < width; ++i) {
        const std::size_t digit = rest % part.base;
        rest /= part.base;
        mapped += inverse[digit] * weight;
        weight *= part.base;
      }
      table[index] = perm[part.table[mapped]];
    }
    part.table = std::move(table);
  }
  return m;
}

std::string MapSpec::ToString() const {
  if (is_shift()) return fmt::format("shift({})", shift_);
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " then ";
    out += fmt::format("code[{},{}]", parts_[i].lo, parts_[i].hi);
  }
  return out;
}

// ---------------------------------------------------------------------------
// SymbolicNDS

SymbolicNDS::SymbolicNDS(Alphabet alphabet, std::vector<MapSpec> preperiod,
                         std::vector<MapSpec> period)
    : alphabet_(alphabet),
      pre_(std::move(preperiod)),
      period_(std::move(period)) {
  if (period_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "period must be nonempty");
  }
}

SymbolicNDS SymbolicNDS::Steps(Alphabet alphabet, std::vector<std::int64_t> pre,
                               std::vector<std::int64_t> period) {
  std::vector<MapSpec> p;
  std::vector<MapSpec> q;
  for (auto k : pre) p.push_back(MapSpec::Shift(k));
  for (auto k : period) q.push_back(MapSpec::Shift(k));
  return SymbolicNDS(alphabet, std::move(p), std::move(q));
}

const MapSpec& SymbolicNDS::map(std::int64_t i) const {
  if (i < 1) throw Error(ErrorCode::kInvalidArgument, "map index is 1-based");
  const auto idx = static_cast<std::size_t>(i - 1);
  if (idx < pre_.size()) return pre_[idx];
  return period_[(idx - pre_.size()) % period_.size()];
}

bool SymbolicNDS::all_shift() const {
  auto shift = [](const MapSpec& m) { return m.is_shift(); };
  return std::all_of(pre_.begin(), pre_.end(), shift) &&
         std::all_of(period_.begin(), period_.end(), shift);
}

SymbolicNDS SymbolicNDS::Normalized() const {
  std::vector<MapSpec> period = period_;
  const std::size_t q = period.size();
  for (std::size_t d = 1; d <= q; ++d) {
    if (q % d) continue;
    bool repeats = true;
    for (std::size_t i = d; i < q && repeats; ++i) {
      repeats = period[i] == period[i - d];
    }
    if (repeats) {
      period.resize(d);
      break;
    }
  }
  std::vector<MapSpec> pre = pre_;
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return SymbolicNDS(alphabet_, std::move(pre), std::move(period));
}

bool operator==(const SymbolicNDS& a, const SymbolicNDS& b) {
  const SymbolicNDS na = a.Normalized();
  const SymbolicNDS nb = b.Normalized();
  return na.alphabet_ == nb.alphabet_ && na.pre_ == nb.pre_ &&
         na.period_ == nb.period_;
}

std::string SymbolicNDS::ToString() const {
  std::string out = fmt::format("A={} pre=[", alphabet_.size());
  for (std::size_t i = 0; i < pre_.size(); ++i) {
    out += (i ? "," : "") + pre_[i].ToString();
  }
  out += "] period=[";
  for (std::size_t i = 0; i < period_.size(); ++i) {
    out += (i ? "," : "") + period_[i].ToString();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Strings and constraints

void ValidateString(const CoverString& s, const Alphabet& alphabet) {
  if (s.radius < 0) throw Error(ErrorCode::kInvalidArgument, "radius < 0");
  if (s.words.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "string length must be >= 1");
  }
  const std::size_t width = 2 * static_cast<std::size_t>(s.radius) + 1;
  for (const Word& w : s.words) {
    if (w.size() != width) {
      throw Error(ErrorCode::kInvalidArgument, "word width != 2r+1");
    }
    for (Symbol a : w) {
      if (!alphabet.Contains(a)) {
        throw Error(ErrorCode::kInvalidArgument, "symbol outside alphabet");
      }
    }
  }
}

bool CylinderConstraint::SatisfiedBy(const TailedPoint& x) const {
  if (empty) return false;
  for (const auto& [n, s] : fixed) {
    if (x.coord(n) != s) return false;
  }
  return true;
}

std::vector<std::int64_t> CumulativeOffsets(const SymbolicNDS& system,
                                            std::int64_t j_max) {
  if (!system.all_shift()) {
    throw Error(ErrorCode::kNotShiftSystem, "system contains a block code");
  }
  std::vector<std::int64_t> k{0};
  for (std::int64_t j = 1; j <= j_max; ++j) {
    k.push_back(k.back() + system.map(j).step());
  }
  return k;
}

TailedPoint Iterate(const SymbolicNDS& system, const TailedPoint& x,
                    std::int64_t j) {
  TailedPoint y = x;
  for (std::int64_t i = 1; i <= j; ++i) y = system.map(i).Apply(y);
  return y;
}

CylinderConstraint StringConstraint(const SymbolicNDS& system,
                                    const CoverString& s) {
  ValidateString(s, system.alphabet());
  const auto k = CumulativeOffsets(system,
                                   static_cast<std::int64_t>(s.length()) - 1);
  CylinderConstraint c;
  const Coord r = s.radius;
  for (std::size_t j = 0; j < s.length(); ++j) {
    for (Coord t = -r; t <= r; ++t) {
      const Symbol want = s.words[j][static_cast<std::size_t>(t + r)];
      auto [it, inserted] = c.fixed.emplace(k[j] + t, want);
      if (!inserted && it->second != want) return CylinderConstraint{true, {}};
    }
  }
  return c;
}

bool PointInString(const SymbolicNDS& system, const TailedPoint& x,
                   const CoverString& s) {
  TailedPoint y = x;
  const Coord r = s.radius;
  for (std::size_t j = 0; j < s.length(); ++j) {
    if (j > 0) y = system.map(static_cast<std::int64_t>(j)).Apply(y);
    for (Coord t = -r; t <= r; ++t) {
      if (y.coord(t) != s.words[j][static_cast<std::size_t>(t + r)]) {
        return false;
      }
    }
  }
  return true;
}

CoverString StringOf(const SymbolicNDS& system, const TailedPoint& x,
                     std::int64_t m, int r) {
  CoverString s{r, {}};
  TailedPoint y = x;
  for (std::int64_t j = 0; j < m; ++j) {
    if (j > 0) y = system.map(j).Apply(y);
    s.words.push_back(y.Window(-r, r));
  }
  return s;
}

std::vector<Coord> DependenceCoords(const SymbolicNDS& system,
                                    std::int64_t m_max, int r) {
  if (m_max < 1) throw Error(ErrorCode::kInvalidArgument, "m_max must be >= 1");
  std::set<Coord> coords;
  Coord lo = 0;
  Coord hi = 0;
  for (std::int64_t j = 0; j < m_max; ++j) {
    if (j > 0) {
      lo += system.map(j).window_lo();
      hi += system.map(j).window_hi();
    }
    for (Coord c = lo - r; c <= hi + r; ++c) coords.insert(c);
  }
  return {coords.begin(), coords.end()};
}

// ---------------------------------------------------------------------------
// System transforms

SymbolicNDS ProductSystem(const SymbolicNDS& s1, const SymbolicNDS& s2) {
  const int a1 = s1.alphabet().size();
  const int a2 = s2.alphabet().size();
  const Alphabet product(a1 * a2);
  const std::size_t pre = std::max(s1.preperiod().size(), s2.preperiod().size());
  const std::size_t period = std::lcm(s1.period().size(), s2.period().size());

  auto product_map = [&](std::int64_t i) {
    const MapSpec& f = s1.map(i);
    const MapSpec& g = s2.map(i);
    if (f.is_shift() && g.is_shift() && f.step() == g.step()) {
      return MapSpec::Shift(f.step());
    }
    const Coord lo = std::min(f.window_lo(), g.window_lo());
    const Coord hi = std::max(f.window_hi(), g.window_hi());
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    std::size_t count = 1;
    for (std::size_t w = 0; w < width; ++w) {
      count *= static_cast<std::size_t>(product.size());
      if (count > (1u << 24)) {
        throw Error(ErrorCode::kCapExceeded, "product code table too large");
      }
    }
    std::vector<Symbol> table(count);
    Word left(width);
    Word right(width);
    for (std::size_t index = 0; index < count; ++index) {
      std::size_t rest = index;
      for (std::size_t w = width; w-- > 0;) {
        const Symbol pair = static_cast<Symbol>(rest % product.size());
        rest /= product.size();
        left[w] = static_cast<Symbol>(pair / a2);
        right[w] = static_cast<Symbol>(pair % a2);
      }
      const Symbol x = f.EvalOnWord(left, lo);
      const Symbol y = g.EvalOnWord(right, lo);
      table[index] = static_cast<Symbol>(x * a2 + y);
    }
    return MapSpec::Code(product.size(), lo, hi, std::move(table));
  };

  std::vector<MapSpec> p;
  std::vector<MapSpec> q;
  for (std::size_t i = 0; i < pre; ++i) {
    p.push_back(product_map(static_cast<std::int64_t>(i + 1)));
  }
  for (std::size_t i = 0; i < period; ++i) {
    q.push_back(product_map(static_cast<std::int64_t>(pre + i + 1)));
  }
  return SymbolicNDS(product, std::move(p), std::move(q)).Normalized();
}

SymbolicNDS PowerSystem(const SymbolicNDS& system, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "power must be >= 1");
  if (m == 1) return system;
  const auto p = static_cast<std::int64_t>(system.preperiod().size());
  const auto q = static_cast<std::int64_t>(system.period().size());
  const std::int64_t new_pre = (p + m - 1) / m;
  const std::int64_t new_period = q / std::gcd(q, m);
  auto block = [&](std::int64_t i) {  // f_{im+1}^m, 0-based i
    MapSpec g = system.map(i * m + 1);
    for (std::int64_t t = 2; t <= m; ++t) {
      g = MapSpec::Compose(system.map(i * m + t), g);
    }
    return g;
  };
  std::vector<MapSpec> pre;
  std::vector<MapSpec> period;
  for (std::int64_t i = 0; i < new_pre; ++i) pre.push_back(block(i));
  for (std::int64_t i = 0; i < new_period; ++i) {
    period.push_back(block(new_pre + i));
  }
  return SymbolicNDS(system.alphabet(), std::move(pre), std::move(period))
      .Normalized();
}

SymbolicNDS TailSystem(const SymbolicNDS& system, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const auto drop = static_cast<std::size_t>(k - 1);
  const auto& pre = system.preperiod();
  if (drop <= pre.size()) {
    return SymbolicNDS(system.alphabet(),
                       std::vector<MapSpec>(pre.begin() + drop, pre.end()),
                       system.period());
  }
  std::vector<MapSpec> period = system.period();
  const std::size_t rot = (drop - pre.size()) % period.size();
  std::rotate(period.begin(), period.begin() + rot, period.end());
  return SymbolicNDS(system.alphabet(), {}, std::move(period));
}

}  // namespace ite
