// Copyright 2026 The teleosched Authors
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

#ifndef TELEOSCHED_TIME_HPP
#define TELEOSCHED_TIME_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace teleosched {

// Fixed-point time with two fractional digits, stored as integer
// hundredths. All timing arithmetic is exact, so ties in the simulation
// compare without float noise.
struct Time {
  std::int64_t centi = 0;

  static constexpr Time zero() { return {}; }
  static constexpr Time infinite() {
    return {std::numeric_limits<std::int64_t>::max()};
  }
  static constexpr Time from_centi(std::int64_t c) { return {c}; }
  static constexpr Time from_units(std::int64_t u) { return {u * 100}; }

  double units() const { return static_cast<double>(centi) / 100.0; }

  friend constexpr auto operator<=>(const Time&, const Time&) = default;
  friend constexpr Time operator+(Time a, Time b) {
    return {a.centi + b.centi};
  }
  friend constexpr Time operator-(Time a, Time b) {
    return {a.centi - b.centi};
  }
  constexpr Time operator-() const { return {-centi}; }
  Time& operator+=(Time other) {
    centi += other.centi;
    return *this;
  }

  // Renders with exactly two fractional digits, e.g. "12.30".
  std::string str() const;

  // Accepts "12", "12.3" or "12.34". Throws ParseError on anything else,
  // including more than two fractional digits.
  static Time parse(std::string_view text);
};

constexpr Time max(Time a, Time b) { return a < b ? b : a; }

}  // namespace teleosched

#endif  // TELEOSCHED_TIME_HPP
