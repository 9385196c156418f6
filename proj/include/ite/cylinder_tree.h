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

#ifndef ITE_CYLINDER_TREE_H_
#define ITE_CYLINDER_TREE_H_

#include <cstdint>
#include <map>
#include <vector>

#include "ite/cover.h"
#include "ite/symbolic.h"
#include "ite/target.h"

namespace ite {

struct TreeSolution {
  long double value = 0;
  // Number of chosen strings of each length.
  std::map<std::int64_t, long double> histogram;
  // Filled only by explicit trees when asked for.
  std::vector<CoverString> cover;
};

// The nonempty sets X(U) n Z for strings U over the radius-r cylinder cover,
// arranged by prefix. Because U_r is a partition these sets are laminar, so
// an optimal window-constrained cover is found by a bottom-up pass.
class CylinderTree {
 public:
  // Nodes are identified by (level, set of still-reachable target
  // components); sibling strings with the same set share one node.
  static CylinderTree Compressed(const SymbolicNDS& system,
                                 const TargetSet& target, int r,
                                 std::int64_t depth);
  // One node per nonempty string, built from the projected universe.
  static CylinderTree Explicit(const SymbolicNDS& system,
                               const TargetSet& target, int r,
                               std::int64_t depth, const Caps& caps = {});
  static bool CanCompress(const SymbolicNDS& system, const TargetSet& target);

  std::int64_t depth() const {
    return static_cast<std::int64_t>(levels_.size()) - 1;
  }
  bool is_explicit() const { return explicit_; }
  std::size_t node_count() const;
  int radius() const { return radius_; }

  // Requires window.MaxLength() <= depth().
  TreeSolution Solve(double alpha, const LengthWindow& window,
                     bool want_cover = false) const;
  // Number of nonempty strings of length m.
  long double StringCount(std::int64_t m) const;

 private:
  struct Edge {
    std::uint32_t child;
    long double multiplicity;
  };
  struct Node {
    std::vector<Edge> children;
    std::uint32_t parent = 0;
    std::uint32_t word = 0;
  };

  std::vector<std::vector<Node>> levels_;
  std::vector<Word> words_;
  int radius_ = 0;
  bool explicit_ = false;
};

}  // namespace ite

#endif  // ITE_CYLINDER_TREE_H_
