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

#include "ite/target.h"

#include <algorithm>
#include <bit>
#include <set>

#include <fmt/format.h>

#include "ite/error.h"

namespace ite {

SymbolMask ProductComponent::At(Coord n) const {
  if (n < lo) return left;
  const Coord i = n - lo;
  if (i >= static_cast<Coord>(inside.size())) return right;
  return inside[static_cast<std::size_t>(i)];
}

bool ProductComponent::Contains(const TailedPoint& x) const {
  if (!((left >> x.left_tail()) & 1) || !((right >> x.right_tail()) & 1)) {
    return false;
  }
  const Coord from = std::min(lo, x.core_start());
  const Coord to = std::max(lo + static_cast<Coord>(inside.size()), x.core_end());
  for (Coord n = from; n < to; ++n) {
    if (!((At(n) >> x.coord(n)) & 1)) return false;
  }
  return true;
}

bool ProductComponent::IsEmpty() const {
  if (left == 0 || right == 0) return true;
  return std::any_of(inside.begin(), inside.end(),
                     [](SymbolMask m) { return m == 0; });
}

TargetSet TargetSet::Whole() { return TargetSet(); }

TargetSet TargetSet::Points(std::vector<TailedPoint> points) {
  std::vector<TailedPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "point list has duplicates");
  }
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "point list is empty");
  }
  TargetSet z;
  z.kind_ = Kind::kPoints;
  z.points_ = std::move(points);
  return z;
}

TargetSet TargetSet::EventuallyConstant(Symbol tail, std::int64_t k_max) {
  TargetSet z;
  z.kind_ = Kind::kEventuallyConstant;
  z.tail_ = tail;
  z.k_max_ = k_max;
  return z;
}

TargetSet TargetSet::Product(ProductComponent component) {
  TargetSet z;
  z.kind_ = Kind::kProduct;
  z.component_ = std::move(component);
  return z;
}

TargetSet TargetSet::Union(std::vector<TargetSet> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty union");
  }
  TargetSet z;
  z.kind_ = Kind::kUnion;
  z.parts_ = std::move(parts);
  return z;
}

std::vector<ProductComponent> TargetSet::Components(
    const Alphabet& alphabet) const {
  if (alphabet.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument,
                "target sets support alphabets of at most 64 symbols");
  }
  const SymbolMask full = FullMask(alphabet.size());
  auto single = [](Symbol s) { return SymbolMask{1} << s; };
  std::vector<ProductComponent> out;
  switch (kind_) {
    case Kind::kWhole:
      out.push_back({0, {}, full, full});
      break;
    case Kind::kPoints:
      for (const auto& x : points_) {
        ProductComponent c{x.core_start(), {}, single(x.left_tail()),
                           single(x.right_tail())};
        for (Symbol s : x.core()) c.inside.push_back(single(s));
        out.push_back(std::move(c));
      }
      break;
    case Kind::kEventuallyConstant: {
      ProductComponent c{0, {}, single(tail_), single(tail_)};
      if (k_max_ >= 1) {
        c.lo = -(k_max_ - 1);
        c.inside.assign(static_cast<std::size_t>(2 * k_max_ - 1), full);
      }
      out.push_back(std::move(c));
      break;
    }
    case Kind::kProduct:
      out.push_back(component_);
      break;
    case Kind::kUnion:
      for (const auto& part : parts_) {
        for (auto& c : part.Components(alphabet)) out.push_back(std::move(c));
      }
      break;
  }
  std::vector<ProductComponent> unique;
  for (auto& c : out) {
    for (auto& m : c.inside) m &= full;
    c.left &= full;
    c.right &= full;
    if (c.IsEmpty()) continue;
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) {
      unique.push_back(std::move(c));
    }
  }
  if (unique.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "target set is empty");
  }
  return unique;
}

bool TargetSet::Contains(const TailedPoint& x, const Alphabet& alphabet) const {
  for (const auto& c : Components(alphabet)) {
    if (c.Contains(x)) return true;
  }
  return false;
}

std::string TargetSet::ToString() const {
  switch (kind_) {
    case Kind::kWhole:
      return "whole";
    case Kind::kPoints:
      return fmt::format("points({})", points_.size());
    case Kind::kEventuallyConstant:
      return fmt::format("eventually_constant(tail={},k_max={})", tail_,
                         k_max_);
    case Kind::kProduct:
      return fmt::format("product(lo={},width={})", component_.lo,
                         component_.inside.size());
    case Kind::kUnion: {
      std::string s = "union(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        s += (i ? "," : "") + parts_[i].ToString();
      }
      return s + ")";
    }
  }
  return "?";
}

std::vector<Word> ProjectUniverse(const TargetSet& target,
                                  const std::vector<Coord>& coords,
                                  const Alphabet& alphabet, std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::kInvalidArgument, "cap must be > 0");
  std::set<Word> words;
  for (const auto& c : target.Components(alphabet)) {
    std::vector<std::vector<Symbol>> choices;
    double count = 1;
    for (Coord n : coords) {
      std::vector<Symbol> allowed;
      for (int a = 0; a < alphabet.size(); ++a) {
        if ((c.At(n) >> a) & 1) allowed.push_back(static_cast<Symbol>(a));
      }
      count *= static_cast<double>(allowed.size());
      choices.push_back(std::move(allowed));
    }
    if (count > static_cast<double>(cap)) {
      throw Error(ErrorCode::kUniverseTooLarge,
                  fmt::format("projection has {} words, cap {}", count, cap));
    }
    std::vector<std::size_t> odometer(coords.size(), 0);
    while (true) {
      Word w(coords.size());
      for (std::size_t i = 0; i < coords.size(); ++i) {
        w[i] = choices[i][odometer[i]];
      }
      words.insert(std::move(w));
      if (words.size() > cap) {
        throw Error(ErrorCode::kUniverseTooLarge, "projection exceeds cap");
      }
      bool done = true;
      for (std::size_t i = coords.size(); i-- > 0;) {
        if (++odometer[i] < choices[i].size()) {
          done = false;
          break;
        }
        odometer[i] = 0;
      }
      if (done) break;
    }
  }
  return {words.begin(), words.end()};
}

TargetSet ShiftImage(const TargetSet& target, std::int64_t k,
                     const Alphabet& alphabet) {
  switch (target.kind()) {
    case TargetSet::Kind::kWhole:
      return target;
    case TargetSet::Kind::kPoints: {
      std::vector<TailedPoint> shifted;
      for (const auto& x : target.points()) shifted.push_back(x.Shifted(k));
      return TargetSet::Points(std::move(shifted));
    }
    case TargetSet::Kind::kUnion: {
      std::vector<TargetSet> parts;
      for (const auto& p : target.parts()) {
        parts.push_back(ShiftImage(p, k, alphabet));
      }
      return TargetSet::Union(std::move(parts));
    }
    case TargetSet::Kind::kEventuallyConstant:
    case TargetSet::Kind::kProduct: {
      // y_n = x_{n+k}: the mask at n moves to n - k.
      ProductComponent c = target.Components(alphabet).front();
      c.lo -= k;
      return TargetSet::Product(std::move(c));
    }
  }
  return target;
}

TargetSet MapImage(const TargetSet& target, const MapSpec& f,
                   const Alphabet& alphabet) {
  if (!f.is_shift()) {
    throw Error(ErrorCode::kNotShiftSystem,
                "images are only computed for shift powers");
  }
  return ShiftImage(target, f.step(), alphabet);
}

TargetSet ProductTarget(const TargetSet& z, const Alphabet& az,
                        const TargetSet& w, const Alphabet& aw) {
  if (az.size() * aw.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument, "product alphabet exceeds 64");
  }
  if (z.kind() == TargetSet::Kind::kWhole &&
      w.kind() == TargetSet::Kind::kWhole) {
    return TargetSet::Whole();
  }
  auto pair_mask = [&](SymbolMask a, SymbolMask b) {
    SymbolMask out = 0;
    for (int i = 0; i < az.size(); ++i) {
      if (!((a >> i) & 1)) continue;
      for (int j = 0; j < aw.size(); ++j) {
        if ((b >> j) & 1) out |= SymbolMask{1} << (i * aw.size() + j);
      }
    }
    return out;
  };
  std::vector<TargetSet> parts;
  for (const auto& c : z.Components(az)) {
    for (const auto& d : w.Components(aw)) {
      const Coord lo = std::min(c.lo, d.lo);
      const Coord hi = std::max(c.lo + static_cast<Coord>(c.inside.size()),
                                d.lo + static_cast<Coord>(d.inside.size()));
      ProductComponent p{lo, {}, pair_mask(c.left, d.left),
                         pair_mask(c.right, d.right)};
      for (Coord n = lo; n < hi; ++n) p.inside.push_back(pair_mask(c.At(n), d.At(n)));
      parts.push_back(TargetSet::Product(std::move(p)));
    }
  }
  if (parts.size() == 1) return parts.front();
  return TargetSet::Union(std::move(parts));
}

Relabeling::Relabeling(std::vector<Symbol> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (Symbol s : perm_) {
    if (s >= perm_.size() || seen[s]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    }
    seen[s] = true;
  }
}

TailedPoint Relabeling::operator()(const TailedPoint& x) const {
  Word core;
  for (Symbol s : x.core()) core.push_back(perm_[s]);
  return TailedPoint(perm_[x.left_tail()], perm_[x.right_tail()],
                     std::move(core), x.core_start());
}

SymbolMask Relabeling::MapMask(SymbolMask m) const {
  SymbolMask out = 0;
  for (std::size_t a = 0; a < perm_.size(); ++a) {
    if ((m >> a) & 1) out |= SymbolMask{1} << perm_[a];
  }
  return out;
}

TargetSet Relabeling::operator()(const TargetSet& z) const {
  switch (z.kind()) {
    case TargetSet::Kind::kWhole:
      return z;
    case TargetSet::Kind::kPoints: {
      std::vector<TailedPoint> pts;
      for (const auto& x : z.points()) pts.push_back((*this)(x));
      return TargetSet::Points(std::move(pts));
    }
    case TargetSet::Kind::kEventuallyConstant:
      return TargetSet::EventuallyConstant(perm_[z.tail()], z.k_max());
    case TargetSet::Kind::kProduct: {
      ProductComponent c = z.component();
      for (auto& m : c.inside) m = MapMask(m);
      c.left = MapMask(c.left);
      c.right = MapMask(c.right);
      return TargetSet::Product(std::move(c));
    }
    case TargetSet::Kind::kUnion: {
      std::vector<TargetSet> parts;
      for (const auto& p : z.parts()) parts.push_back((*this)(p));
      return TargetSet::Union(std::move(parts));
    }
  }
  return z;
}

Relabeling Relabeling::Then(const Relabeling& next) const {
  std::vector<Symbol> composed(perm_.size());
  for (std::size_t a = 0; a < perm_.size(); ++a) composed[a] = next.perm_[perm_[a]];
  return Relabeling(std::move(composed));
}

std::pair<SymbolicNDS, Relabeling> RelabelSystem(
    const SymbolicNDS& system, const std::vector<Symbol>& perm) {
  if (perm.size() != static_cast<std::size_t>(system.alphabet().size())) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size != alphabet");
  }
  Relabeling relabel(perm);
  std::vector<MapSpec> pre;
  std::vector<MapSpec> period;
  for (const auto& f : system.preperiod()) pre.push_back(f.Relabeled(perm));
  for (const auto& f : system.period()) period.push_back(f.Relabeled(perm));
  return {SymbolicNDS(system.alphabet(), std::move(pre), std::move(period)),
          std::move(relabel)};
}

}  // namespace ite
