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

#include "ite/rational.h"

#include <charconv>
#include <numeric>

#include "ite/error.h"

namespace ite {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotShiftSystem: return "NotShiftSystem";
    case ErrorCode::kUniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::kCandidateBudgetExceeded: return "CandidateBudgetExceeded";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kThetaZeroNeedsCap: return "ThetaZeroNeedsCap";
    case ErrorCode::kConfig: return "ConfigError";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

namespace {

std::int64_t ParseInt(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kConfig, "not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = ParseInt(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::kConfig, "zero denominator");
    return Rational(ParseInt(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw Error(ErrorCode::kConfig, "too many decimals");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string_view whole = text.substr(0, dot);
    const bool neg = !whole.empty() && whole.front() == '-';
    const std::int64_t w =
        whole.empty() || whole == "-" ? 0 : ParseInt(whole);
    const std::int64_t f = frac.empty() ? 0 : ParseInt(frac);
    const std::int64_t mag = (w < 0 ? -w : w) * den + f;
    return Rational(neg ? -mag : mag, den);
  }
  return Rational(ParseInt(text), 1);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace ite
