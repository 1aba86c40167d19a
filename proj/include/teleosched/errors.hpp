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

#ifndef TELEOSCHED_ERRORS_HPP
#define TELEOSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace teleosched {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. line/column are 1-based when known, 0 otherwise.
struct ParseError : Error {
  explicit ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line(line), column(column) {}
  int line;
  int column;
};

// Structurally well-formed input that violates a domain invariant.
// `field` names the offending value, e.g. "robots[2][0].alpha".
struct ValidationError : Error {
  explicit ValidationError(const std::string& what, std::string field = {})
      : Error(what), field(std::move(field)) {}
  std::string field;
};

struct InvalidArgument : Error {
  using Error::Error;
};

}  // namespace teleosched

#endif  // TELEOSCHED_ERRORS_HPP
