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

#ifndef ITE_SRC_LEVEL_CODES_H_
#define ITE_SRC_LEVEL_CODES_H_

#include <cstdint>
#include <vector>

#include "ite/symbolic.h"

namespace ite::internal {

// codes[u][j] is the id of the radius-r word seen by f_1^j at universe point
// u (given on `coords`); `words` receives the id table.
std::vector<std::vector<std::uint32_t>> LevelCodes(
    const SymbolicNDS& system, const std::vector<Coord>& coords,
    const std::vector<Word>& universe, std::int64_t levels, int r,
    std::vector<Word>* words);

}  // namespace ite::internal

#endif  // ITE_SRC_LEVEL_CODES_H_
