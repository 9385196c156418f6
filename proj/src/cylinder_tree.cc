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

#include "ite/cylinder_tree.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "ite/error.h"
#include "level_codes.h"

namespace ite {

bool CylinderTree::CanCompress(const SymbolicNDS& system,
                               const TargetSet& target) {
  if (!system.all_shift() || system.alphabet().size() > 64) return false;
  return target.Components(system.alphabet()).size() <= 64;
}

CylinderTree CylinderTree::Compressed(const SymbolicNDS& system,
                                      const TargetSet& target, int r,
                                      std::int64_t depth) {
  if (!system.all_shift()) {
    throw Error(ErrorCode::kNotShiftSystem,
                "compressed trees need shift-power maps");
  }
  if (r < 0 || depth < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bad radius or depth");
  }
  const auto components = target.Components(system.alphabet());
  if (components.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument,
                "compressed trees support at most 64 target components");
  }
  const int alphabet = system.alphabet().size();
  const auto k = CumulativeOffsets(system, depth);

  CylinderTree tree;
  tree.radius_ = r;
  const std::uint64_t all = components.size() == 64
                                ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << components.size()) - 1;
  std::vector<std::uint64_t> state{all};
  tree.levels_.push_back({Node{}});
  std::set<Coord> seen;
  for (std::int64_t m = 0; m < depth; ++m) {
    std::vector<Coord> fresh;
    for (Coord t = -r; t <= r; ++t) {
      const Coord c = k[static_cast<std::size_t>(m)] + t;
      if (seen.insert(c).second) fresh.push_back(c);
    }
    // allowed[i][a]: components that accept symbol a at fresh[i].
    std::vector<std::vector<std::uint64_t>> allowed(fresh.size());
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      allowed[i].assign(static_cast<std::size_t>(alphabet), 0);
      for (std::size_t c = 0; c < components.size(); ++c) {
        const SymbolMask mask = components[c].At(fresh[i]);
        for (int a = 0; a < alphabet; ++a) {
          if ((mask >> a) & 1) {
            allowed[i][static_cast<std::size_t>(a)] |= std::uint64_t{1} << c;
          }
        }
      }
    }
    std::map<std::uint64_t, std::uint32_t> index;
    std::vector<std::map<std::uint64_t, long double>> out(state.size());
    for (std::size_t s = 0; s < state.size(); ++s) {
      std::map<std::uint64_t, long double> counts{{state[s], 1.0L}};
      for (const auto& row : allowed) {
        std::map<std::uint64_t, long double> next;
        for (const auto& [mask, count] : counts) {
          for (auto a : row) {
            if (mask & a) next[mask & a] += count;
          }
        }
        counts = std::move(next);
      }
      for (const auto& [mask, count] : counts) index.emplace(mask, 0);
      out[s] = std::move(counts);
    }
    std::vector<std::uint64_t> next_state;
    for (auto& [mask, id] : index) {
      id = static_cast<std::uint32_t>(next_state.size());
      next_state.push_back(mask);
    }
    std::vector<Node> level(next_state.size());
    auto& parents = tree.levels_.back();
    for (std::size_t s = 0; s < state.size(); ++s) {
      for (const auto& [mask, count] : out[s]) {
        parents[s].children.push_back({index.at(mask), count});
      }
    }
    tree.levels_.push_back(std::move(level));
    state = std::move(next_state);
  }
  return tree;
}

CylinderTree CylinderTree::Explicit(const SymbolicNDS& system,
                                    const TargetSet& target, int r,
                                    std::int64_t depth, const Caps& caps) {
  if (r < 0 || depth < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bad radius or depth");
  }
  const auto coords = DependenceCoords(system, depth, r);
  const auto universe =
      ProjectUniverse(target, coords, system.alphabet(), caps.universe);
  CylinderTree tree;
  tree.radius_ = r;
  tree.explicit_ = true;
  const auto codes = internal::LevelCodes(system, coords, universe, depth, r,
                                          &tree.words_);
  tree.levels_.push_back({Node{}});
  std::vector<std::uint32_t> at(universe.size(), 0);
  for (std::int64_t m = 0; m < depth; ++m) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
    std::vector<Node> level;
    auto& parents = tree.levels_.back();
    for (std::size_t u = 0; u < universe.size(); ++u) {
      const std::uint32_t word = codes[u][static_cast<std::size_t>(m)];
      auto [it, inserted] = index.emplace(
          std::make_pair(at[u], word), static_cast<std::uint32_t>(level.size()));
      if (inserted) {
        Node node;
        node.parent = at[u];
        node.word = word;
        level.push_back(node);
        parents[at[u]].children.push_back({it->second, 1.0L});
      }
      at[u] = it->second;
    }
    if (level.size() > caps.candidates) {
      throw Error(ErrorCode::kCandidateBudgetExceeded,
                  fmt::format("more than {} strings of length {}",
                              caps.candidates, m + 1));
    }
    tree.levels_.push_back(std::move(level));
  }
  return tree;
}

std::size_t CylinderTree::node_count() const {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

long double CylinderTree::StringCount(std::int64_t m) const {
  if (m < 0 || m > depth()) {
    throw Error(ErrorCode::kInvalidArgument, "length outside the tree");
  }
  std::vector<long double> usage{1.0L};
  for (std::int64_t level = 0; level < m; ++level) {
    const auto& nodes = levels_[static_cast<std::size_t>(level)];
    std::vector<long double> next(levels_[static_cast<std::size_t>(level + 1)].size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (const auto& e : nodes[i].children) {
        next[e.child] += usage[i] * e.multiplicity;
      }
    }
    usage = std::move(next);
  }
  long double total = 0;
  for (auto u : usage) total += u;
  return total;
}

TreeSolution CylinderTree::Solve(double alpha, const LengthWindow& window,
                                 bool want_cover) const {
  if (!(alpha >= 0)) throw Error(ErrorCode::kInvalidArgument, "alpha < 0");
  const std::int64_t top = window.MaxLength();
  if (top > depth()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("window reaches length {}, tree depth {}", top,
                            depth()));
  }
  const auto weight = [alpha](std::int64_t m) {
    return std::exp(-static_cast<long double>(alpha) *
                    static_cast<long double>(m));
  };
  const auto top_index = static_cast<std::size_t>(top);
  std::vector<std::vector<long double>> cost(top_index + 1);
  std::vector<std::vector<bool>> take(top_index + 1);
  cost[top_index].assign(levels_[top_index].size(), weight(top));
  take[top_index].assign(levels_[top_index].size(), true);
  for (std::size_t m = top_index; m-- > 0;) {
    const auto& nodes = levels_[m];
    cost[m].resize(nodes.size());
    take[m].assign(nodes.size(), false);
    const bool allowed =
        m > 0 && window.Allows(static_cast<std::int64_t>(m));
    const long double here = weight(static_cast<std::int64_t>(m));
    std::vector<long double> terms;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      // Summed in sorted order, so isomorphic trees give identical bits.
      terms.clear();
      for (const auto& e : nodes[i].children) {
        terms.push_back(e.multiplicity * cost[m + 1][e.child]);
      }
      std::sort(terms.begin(), terms.end());
      long double split = 0;
      for (long double t : terms) split += t;
      if (allowed && here <= split) {
        cost[m][i] = here;
        take[m][i] = true;
      } else {
        cost[m][i] = split;
      }
    }
  }

  TreeSolution sol;
  sol.value = cost[0][0];
  std::vector<long double> usage{1.0L};
  std::vector<std::uint32_t> chosen_here;
  for (std::size_t m = 0; m <= top_index; ++m) {
    const auto& nodes = levels_[m];
    std::vector<long double> next(
        m < top_index ? levels_[m + 1].size() : 0, 0.0L);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (usage[i] == 0) continue;
      if (take[m][i]) {
        sol.histogram[static_cast<std::int64_t>(m)] += usage[i];
        if (want_cover && explicit_) {
          CoverString s{radius_, std::vector<Word>(m)};
          std::uint32_t id = static_cast<std::uint32_t>(i);
          for (std::size_t level = m; level > 0; --level) {
            const Node& node = levels_[level][id];
            s.words[level - 1] = words_[node.word];
            id = node.parent;
          }
          sol.cover.push_back(std::move(s));
        }
        continue;
      }
      for (const auto& e : nodes[i].children) {
        next[e.child] += usage[i] * e.multiplicity;
      }
    }
    usage = std::move(next);
  }
  return sol;
}

}  // namespace ite
