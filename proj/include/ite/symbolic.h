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

// Two-sided shift spaces over a finite alphabet, nonautonomous sequences of
// shift powers and sliding-block codes, and the cylinder strings X(U) built
// from the radius-r cylinder cover.

#ifndef ITE_SYMBOLIC_H_
#define ITE_SYMBOLIC_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ite {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;
using Coord = std::int64_t;

class Alphabet {
 public:
  explicit Alphabet(int size);
  int size() const { return size_; }
  bool Contains(Symbol s) const { return s < size_; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

// A bi-infinite sequence that equals `left_tail` far to the left and
// `right_tail` far to the right. Always stored in canonical form: the core is
// trimmed so it neither starts with the left tail nor ends with the right
// tail, so equality of objects is equality of points.
class TailedPoint {
 public:
  TailedPoint(Symbol left_tail, Symbol right_tail, Word core,
              Coord core_start);
  static TailedPoint Constant(Symbol s) { return TailedPoint(s, s, {}, 0); }

  Symbol coord(Coord n) const;
  Symbol left_tail() const { return left_; }
  Symbol right_tail() const { return right_; }
  const Word& core() const { return core_; }
  Coord core_start() const { return start_; }
  Coord core_end() const { return start_ + static_cast<Coord>(core_.size()); }

  // y with y_n = x_{n+k}.
  TailedPoint Shifted(Coord k) const;
  TailedPoint WithCoord(Coord n, Symbol s) const;
  // Symbols at coordinates lo..hi inclusive.
  Word Window(Coord lo, Coord hi) const;
  std::string ToString() const;

  friend bool operator==(const TailedPoint&, const TailedPoint&) = default;
  friend auto operator<=>(const TailedPoint&, const TailedPoint&) = default;

 private:
  Symbol left_;
  Symbol right_;
  Word core_;
  Coord start_;
};

// One map of the sequence: a shift power sigma_k, or a sliding-block code
// whose output coordinate n depends on input coordinates n+lo .. n+hi.
// Shift powers are absorbed into codes on composition; composing two codes
// keeps a lazily evaluated chain instead of tabulating the product table.
class MapSpec {
 public:
  static constexpr int kMaxChainDepth = 64;

  // sigma_k, k >= 1.
  static MapSpec Shift(std::int64_t k);
  // `table` is indexed by the base-`alphabet` value of the input word read
  // from coordinate n+lo (most significant) to n+hi.
  static MapSpec Code(int alphabet, Coord lo, Coord hi,
                      std::vector<Symbol> table);
  // outer o inner.
  static MapSpec Compose(const MapSpec& outer, const MapSpec& inner);

  bool is_shift() const { return parts_.empty(); }
  // Only meaningful for shifts.
  std::int64_t step() const { return shift_; }
  Coord window_lo() const;
  Coord window_hi() const;

  TailedPoint Apply(const TailedPoint& x) const;
  // Output coordinate 0 for an input known on coordinates
  // word_lo .. word_lo + |word| - 1 (must contain the dependence window).
  Symbol EvalOnWord(const Word& word, Coord word_lo) const;
  // Conjugates by a symbol permutation: returns p o f o p^-1.
  MapSpec Relabeled(const std::vector<Symbol>& perm) const;
  std::string ToString() const;

  friend bool operator==(const MapSpec&, const MapSpec&) = default;

 private:
  struct CodePart {
    Coord lo = 0;
    Coord hi = 0;
    int base = 2;
    std::vector<Symbol> table;
    friend bool operator==(const CodePart&, const CodePart&) = default;
  };

  static TailedPoint ApplyPart(const CodePart& part, const TailedPoint& x);
  void Normalize();

  std::int64_t shift_ = 0;
  std::vector<CodePart> parts_;  // parts_[0] is applied first
};

// f_i = preperiod[i-1] for i <= |preperiod|, then the period repeats.
class SymbolicNDS {
 public:
  SymbolicNDS(Alphabet alphabet, std::vector<MapSpec> preperiod,
              std::vector<MapSpec> period);
  static SymbolicNDS Constant(Alphabet alphabet, MapSpec f) {
    return SymbolicNDS(alphabet, {}, {std::move(f)});
  }
  // Shift-power system with the given step sequence (preperiod, period).
  static SymbolicNDS Steps(Alphabet alphabet, std::vector<std::int64_t> pre,
                           std::vector<std::int64_t> period);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<MapSpec>& preperiod() const { return pre_; }
  const std::vector<MapSpec>& period() const { return period_; }
  // f_i, 1-based.
  const MapSpec& map(std::int64_t i) const;
  bool all_shift() const;

  // Minimal period, with the preperiod folded into the period where possible.
  SymbolicNDS Normalized() const;
  std::string ToString() const;

  // Equality of the map sequences (compares normalized forms).
  friend bool operator==(const SymbolicNDS& a, const SymbolicNDS& b);

 private:
  Alphabet alphabet_;
  std::vector<MapSpec> pre_;
  std::vector<MapSpec> period_;
};

struct CoverString {
  int radius = 0;
  std::vector<Word> words;  // words[j] is the cylinder on [-r, r] for step j
  std::size_t length() const { return words.size(); }
  friend bool operator==(const CoverString&, const CoverString&) = default;
  friend auto operator<=>(const CoverString&, const CoverString&) = default;
};

// Throws unless the string is nonempty with words of length 2r+1 over the
// alphabet.
void ValidateString(const CoverString& s, const Alphabet& alphabet);

struct CylinderConstraint {
  bool empty = false;
  std::map<Coord, Symbol> fixed;

  bool SatisfiedBy(const TailedPoint& x) const;
  friend bool operator==(const CylinderConstraint&,
                         const CylinderConstraint&) = default;
};

// K_0 .. K_{j_max}; throws NotShiftSystem for block codes.
std::vector<std::int64_t> CumulativeOffsets(const SymbolicNDS& system,
                                            std::int64_t j_max);

// f_1^j x.
TailedPoint Iterate(const SymbolicNDS& system, const TailedPoint& x,
                    std::int64_t j);

CylinderConstraint StringConstraint(const SymbolicNDS& system,
                                    const CoverString& s);

bool PointInString(const SymbolicNDS& system, const TailedPoint& x,
                   const CoverString& s);

// The string of length m at radius r that contains x.
CoverString StringOf(const SymbolicNDS& system, const TailedPoint& x,
                     std::int64_t m, int r);

// Sorted coordinates on which membership in any string of length <= m_max
// depends.
std::vector<Coord> DependenceCoords(const SymbolicNDS& system,
                                    std::int64_t m_max, int r);

SymbolicNDS ProductSystem(const SymbolicNDS& s1, const SymbolicNDS& s2);
SymbolicNDS PowerSystem(const SymbolicNDS& system, std::int64_t m);
// f_{k,infinity}.
SymbolicNDS TailSystem(const SymbolicNDS& system, std::int64_t k);

}  // namespace ite

#endif  // ITE_SYMBOLIC_H_
