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

#include "teleosched/time.hpp"

#include <cctype>
#include <cstdlib>

#include "teleosched/errors.hpp"

namespace teleosched {

std::string Time::str() const {
  std::int64_t c = centi;
  std::string sign;
  if (c < 0) {
    sign = "-";
    c = -c;
  }
  std::string out = sign + std::to_string(c / 100) + '.';
  const std::int64_t frac = c % 100;
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

Time Time::parse(std::string_view text) {
  const auto fail = [&] {
    throw ParseError("invalid duration literal: '" + std::string(text) + "'");
  };

  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }

  std::int64_t whole = 0;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    whole = whole * 10 + (text[i] - '0');
    ++i;
    ++digits;
  }
  if (digits == 0) fail();

  std::int64_t frac = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_digits = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      frac = frac * 10 + (text[i] - '0');
      ++i;
      ++frac_digits;
    }
    if (frac_digits == 0 || frac_digits > 2) fail();
    if (frac_digits == 1) frac *= 10;
  }
  if (i != text.size()) fail();

  const std::int64_t c = whole * 100 + frac;
  return Time::from_centi(negative ? -c : c);
}

}  // namespace teleosched
