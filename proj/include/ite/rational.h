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

#ifndef ITE_RATIONAL_H_
#define ITE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ite {

// Exact nonnegative rational p/q in lowest terms. Used for theta so that the
// length-window boundary n < N/theta + 1 never depends on rounding.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);
  static Rational Integer(std::int64_t v) { return Rational(v, 1); }

  // Accepts "p/q", "p" or a terminating decimal such as "0.25".
  static Rational Parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ite

#endif  // ITE_RATIONAL_H_
