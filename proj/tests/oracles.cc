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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace oracle {

const Map& System::at(std::int64_t i) const {
  const auto k = static_cast<std::size_t>(i - 1);
  if (k < pre.size()) return pre[k];
  return period[(k - pre.size()) % period.size()];
}

int Box::at(std::int64_t n) const {
  if (n < lo || n >= lo + static_cast<std::int64_t>(v.size())) {
    throw std::out_of_range("oracle box too small");
  }
  return v[static_cast<std::size_t>(n - lo)];
}

Box Apply(const Map& f, const Box& x, int alphabet) {
  Box y;
  const std::int64_t hi = x.lo + static_cast<std::int64_t>(x.v.size()) - 1;
  if (f.shift > 0) {
    y.lo = x.lo - f.shift;
    y.v = x.v;
    return y;
  }
  y.lo = x.lo - f.lo;
  for (std::int64_t n = y.lo; n + f.hi <= hi; ++n) {
    int idx = 0;
    for (int t = f.lo; t <= f.hi; ++t) idx = idx * alphabet + x.at(n + t);
    y.v.push_back(f.table[static_cast<std::size_t>(idx)]);
  }
  return y;
}

std::vector<Box> AllBoxes(int alphabet, std::int64_t lo, std::int64_t hi,
                          const std::function<bool(std::int64_t, int)>& allowed) {
  std::vector<Box> out;
  Box b;
  b.lo = lo;
  b.v.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == b.v.size()) {
      out.push_back(b);
      return;
    }
    for (int s = 0; s < alphabet; ++s) {
      if (!allowed(lo + static_cast<std::int64_t>(i), s)) continue;
      b.v[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::int64_t> WindowLengths(std::int64_t n, std::int64_t p,
                                        std::int64_t q, std::int64_t cap) {
  std::vector<std::int64_t> out;
  if (p == 0) {
    for (std::int64_t m = n; m <= cap; ++m) out.push_back(m);
    return out;
  }
  for (std::int64_t m = n; (m - 1) * p < n * q; ++m) out.push_back(m);
  return out;
}

long double MinCylinderCover(const System& sys, const std::vector<Box>& points,
                             int r, const std::vector<std::int64_t>& lengths,
                             double alpha) {
  const std::int64_t top = *std::max_element(lengths.begin(), lengths.end());
  // Label sequence of each point, then collapse equal sequences.
  std::map<std::vector<std::vector<int>>, int> ids;
  for (const auto& p : points) {
    std::vector<std::vector<int>> labels;
    Box x = p;
    for (std::int64_t j = 0; j < top; ++j) {
      std::vector<int> w;
      for (int t = -r; t <= r; ++t) w.push_back(x.at(t));
      labels.push_back(std::move(w));
      if (j + 1 < top) x = Apply(sys.at(j + 1), x, sys.alphabet);
    }
    ids.emplace(std::move(labels), static_cast<int>(ids.size()));
  }
  const std::size_t u = ids.size();
  if (u > 16) throw std::length_error("oracle universe too large");
  std::vector<std::uint32_t> masks;
  std::vector<long double> weights;
  for (auto m : lengths) {
    std::map<std::vector<std::vector<int>>, std::uint32_t> prefixes;
    for (const auto& [labels, id] : ids) {
      std::vector<std::vector<int>> pre(labels.begin(), labels.begin() + m);
      prefixes[pre] |= std::uint32_t{1} << id;
    }
    for (const auto& [pre, mask] : prefixes) {
      masks.push_back(mask);
      weights.push_back(std::exp(-static_cast<long double>(alpha) * m));
    }
  }
  const std::uint32_t full = (std::uint32_t{1} << u) - 1;
  std::vector<long double> best(std::size_t{full} + 1,
                                std::numeric_limits<long double>::infinity());
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    for (std::size_t c = 0; c < masks.size(); ++c) {
      if (!(masks[c] & low)) continue;
      best[mask] = std::min(best[mask], weights[c] + best[mask & ~masks[c]]);
    }
  }
  return best[full];
}

long double ExhaustiveCover(std::size_t universe,
                            const std::vector<std::vector<std::uint32_t>>& sets,
                            const std::vector<long double>& weights,
                            std::vector<std::size_t>* best) {
  long double value = std::numeric_limits<long double>::infinity();
  const std::size_t k = sets.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<bool> hit(universe, false);
    std::vector<long double> w;
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < k; ++c) {
      if (!((pick >> c) & 1)) continue;
      for (auto e : sets[c]) hit[e] = true;
      w.push_back(weights[c]);
      chosen.push_back(c);
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) continue;
    // Smallest terms first.
    std::sort(w.begin(), w.end());
    long double s = 0;
    for (auto x : w) s += x;
    if (s < value) {
      value = s;
      if (best) *best = chosen;
    }
  }
  return value;
}

std::size_t Metric::f(std::int64_t i, std::size_t x) const {
  const auto k = static_cast<std::size_t>(i - 1);
  if (k < pre.size()) return pre[k][x];
  return period[(k - pre.size()) % period.size()][x];
}

double Bowen(const Metric& m, std::size_t x, std::size_t y, std::int64_t n,
             std::int64_t start) {
  double out = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    out = std::max(out, m.d[x][y]);
    x = m.f(start + j, x);
    y = m.f(start + j, y);
  }
  return out;
}

double SupBowen(const Metric& m, std::size_t x, std::size_t y, std::int64_t n) {
  double out = 0;
  const auto starts = static_cast<std::int64_t>(m.pre.size() + m.period.size());
  for (std::int64_t s = 1; s <= starts; ++s) {
    out = std::max(out, Bowen(m, x, y, n, s));
  }
  return out;
}

std::int64_t Spanning(const Metric& m, const std::vector<std::size_t>& z,
                      std::int64_t n, double eps, bool sup) {
  const std::size_t p = m.d.size();
  std::int64_t best = -1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << p); ++pick) {
    const auto size = static_cast<std::int64_t>(__builtin_popcountll(pick));
    if (best >= 0 && size >= best) continue;
    bool ok = true;
    for (auto y : z) {
      bool near = false;
      for (std::size_t c = 0; c < p && !near; ++c) {
        if (!((pick >> c) & 1)) continue;
        const double d = sup ? SupBowen(m, c, y, n) : Bowen(m, c, y, n);
        near = d <= eps;
      }
      ok = ok && near;
    }
    if (ok) best = size;
  }
  return best;
}

std::int64_t Separated(const Metric& m, const std::vector<std::size_t>& z,
                       std::int64_t n, double eps) {
  std::int64_t best = 0;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << z.size()); ++pick) {
    bool ok = true;
    for (std::size_t i = 0; i < z.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < z.size() && ok; ++j) {
        if (((pick >> i) & 1) && ((pick >> j) & 1)) {
          ok = Bowen(m, z[i], z[j], n) > eps;
        }
      }
    }
    if (ok) best = std::max<std::int64_t>(best, __builtin_popcountll(pick));
  }
  return best;
}

}  // namespace oracle
