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

#include "level_codes.h"

#include <map>

namespace ite::internal {

std::vector<std::vector<std::uint32_t>> LevelCodes(
    const SymbolicNDS& system, const std::vector<Coord>& coords,
    const std::vector<Word>& universe, std::int64_t levels, int r,
    std::vector<Word>* words) {
  std::map<Word, std::uint32_t> ids;
  auto intern = [&](Word w) {
    auto [it, inserted] =
        ids.emplace(std::move(w), static_cast<std::uint32_t>(words->size()));
    if (inserted) words->push_back(it->first);
    return it->second;
  };
  std::vector<std::vector<std::uint32_t>> codes(universe.size());
  if (system.all_shift()) {
    const auto k = CumulativeOffsets(system, levels);
    std::map<Coord, std::size_t> where;
    for (std::size_t i = 0; i < coords.size(); ++i) where[coords[i]] = i;
    for (std::size_t u = 0; u < universe.size(); ++u) {
      for (std::int64_t j = 0; j < levels; ++j) {
        Word w;
        for (Coord t = -r; t <= r; ++t) {
          w.push_back(universe[u][where.at(k[static_cast<std::size_t>(j)] + t)]);
        }
        codes[u].push_back(intern(std::move(w)));
      }
    }
    return codes;
  }
  const Coord lo = coords.front();
  const Coord hi = coords.back();
  for (std::size_t u = 0; u < universe.size(); ++u) {
    Word core(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      core[static_cast<std::size_t>(coords[i] - lo)] = universe[u][i];
    }
    TailedPoint x(0, 0, core, lo);
    for (std::int64_t j = 0; j < levels; ++j) {
      if (j > 0) x = system.map(j).Apply(x);
      codes[u].push_back(intern(x.Window(-r, r)));
    }
  }
  return codes;
}

}  // namespace ite::internal
