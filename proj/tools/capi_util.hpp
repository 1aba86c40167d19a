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

#ifndef TELEOSCHED_TOOLS_CAPI_UTIL_HPP
#define TELEOSCHED_TOOLS_CAPI_UTIL_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include "teleosched.h"

namespace cli {

// CLI failure with the exit code it should map to: 1 for usage/input
// problems, 2 for runtime failures.
struct CommandError : std::runtime_error {
  CommandError(std::string what, int exit_code)
      : std::runtime_error(std::move(what)), exit_code(exit_code) {}
  int exit_code;
};

inline void check(ts_status status) {
  if (status == TS_OK) return;
  const int code = status == TS_ERR_INTERNAL ? 2 : 1;
  throw CommandError(ts_last_error(), code);
}

struct InstanceDeleter {
  void operator()(ts_instance* p) const { ts_instance_free(p); }
};
struct ScheduleDeleter {
  void operator()(ts_schedule* p) const { ts_schedule_free(p); }
};
struct TimelineDeleter {
  void operator()(ts_timeline* p) const { ts_timeline_free(p); }
};
struct SolutionDeleter {
  void operator()(ts_solution* p) const { ts_solution_free(p); }
};
struct FormulaDeleter {
  void operator()(ts_formula* p) const { ts_formula_free(p); }
};

using InstancePtr = std::unique_ptr<ts_instance, InstanceDeleter>;
using SchedulePtr = std::unique_ptr<ts_schedule, ScheduleDeleter>;
using TimelinePtr = std::unique_ptr<ts_timeline, TimelineDeleter>;
using SolutionPtr = std::unique_ptr<ts_solution, SolutionDeleter>;
using FormulaPtr = std::unique_ptr<ts_formula, FormulaDeleter>;

inline std::string take_string(char* text) {
  std::string out(text);
  ts_string_free(text);
  return out;
}

inline std::string format_time(ts_time t) {
  std::string sign;
  if (t < 0) {
    sign = "-";
    t = -t;
  }
  std::string out = sign + std::to_string(t / 100) + '.';
  out += static_cast<char>('0' + (t % 100) / 10);
  out += static_cast<char>('0' + t % 10);
  return out;
}

}  // namespace cli

#endif  // TELEOSCHED_TOOLS_CAPI_UTIL_HPP
