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

// Target sets Z for the symbolic estimators, their finite projections, and
// the images/relabelings the law checks need.

#ifndef ITE_TARGET_H_
#define ITE_TARGET_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ite/symbolic.h"

namespace ite {

// Bit a is set iff symbol a is allowed. Limits target alphabets to 64 symbols.
using SymbolMask = std::uint64_t;

inline SymbolMask FullMask(int alphabet) {
  return alphabet >= 64 ? ~SymbolMask{0} : (SymbolMask{1} << alphabet) - 1;
}

// A coordinate-product set: every coordinate independently ranges over a
// mask. Coordinates below `lo` use `left`, those at or beyond
// lo + |inside| use `right`.
struct ProductComponent {
  Coord lo = 0;
  std::vector<SymbolMask> inside;
  SymbolMask left = 0;
  SymbolMask right = 0;

  SymbolMask At(Coord n) const;
  bool Contains(const TailedPoint& x) const;
  bool IsEmpty() const;
  friend bool operator==(const ProductComponent&,
                         const ProductComponent&) = default;
};

class TargetSet {
 public:
  enum class Kind { kWhole, kPoints, kEventuallyConstant, kProduct, kUnion };

  static TargetSet Whole();
  // Throws if two points coincide.
  static TargetSet Points(std::vector<TailedPoint> points);
  // Union of Z_k for k <= k_max, i.e. Z_{k_max} = {x : x_n = tail, |n| >= k_max}.
  static TargetSet EventuallyConstant(Symbol tail, std::int64_t k_max);
  static TargetSet Product(ProductComponent component);
  static TargetSet Union(std::vector<TargetSet> parts);

  Kind kind() const { return kind_; }
  const std::vector<TailedPoint>& points() const { return points_; }
  Symbol tail() const { return tail_; }
  std::int64_t k_max() const { return k_max_; }
  const ProductComponent& component() const { return component_; }
  const std::vector<TargetSet>& parts() const { return parts_; }

  // Z as a finite union of coordinate-product sets.
  std::vector<ProductComponent> Components(const Alphabet& alphabet) const;
  bool Contains(const TailedPoint& x, const Alphabet& alphabet) const;
  std::string ToString() const;

  friend bool operator==(const TargetSet&, const TargetSet&) = default;

 private:
  Kind kind_ = Kind::kWhole;
  std::vector<TailedPoint> points_;
  Symbol tail_ = 0;
  std::int64_t k_max_ = 0;
  ProductComponent component_;
  std::vector<TargetSet> parts_;
};

// Distinct restrictions x|_J over x in Z, sorted. Throws UniverseTooLarge if
// there would be more than `cap`.
std::vector<Word> ProjectUniverse(const TargetSet& target,
                                  const std::vector<Coord>& coords,
                                  const Alphabet& alphabet, std::size_t cap);

// sigma_k(Z).
TargetSet ShiftImage(const TargetSet& target, std::int64_t k,
                     const Alphabet& alphabet);

// f_k(Z) for a shift-power map; Skipped-class callers must check is_shift().
TargetSet MapImage(const TargetSet& target, const MapSpec& f,
                   const Alphabet& alphabet);

// Z x W over the product alphabet (pair symbol = a * |A_W| + b).
TargetSet ProductTarget(const TargetSet& z, const Alphabet& az,
                        const TargetSet& w, const Alphabet& aw);

// Symbol permutation acting on points and targets.
class Relabeling {
 public:
  explicit Relabeling(std::vector<Symbol> perm);
  const std::vector<Symbol>& perm() const { return perm_; }
  Symbol operator()(Symbol s) const { return perm_[s]; }
  TailedPoint operator()(const TailedPoint& x) const;
  TargetSet operator()(const TargetSet& z) const;
  Relabeling Then(const Relabeling& next) const;  // next o this

 private:
  SymbolMask MapMask(SymbolMask m) const;
  std::vector<Symbol> perm_;
};

// Conjugates the system by the permutation; shift-power systems come back
// unchanged.
std::pair<SymbolicNDS, Relabeling> RelabelSystem(const SymbolicNDS& system,
                                                 const std::vector<Symbol>& perm);

}  // namespace ite

#endif  // ITE_TARGET_H_
