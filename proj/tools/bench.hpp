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

#ifndef TELEOSCHED_TOOLS_BENCH_HPP
#define TELEOSCHED_TOOLS_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "teleosched.h"

namespace cli {

struct BenchOptions {
  int robots = 2;
  int tasks = 5;
  int count = 100;
  std::uint64_t seed_base = 1;
  bool with_exact = false;
  int exact_max_tasks = 25;
  double time_limit_seconds = 60.0;
  std::vector<std::string> solvers;  // empty = mode default
  int epsilon_mode = TS_EPSILON_ZERO;
  ts_time epsilon = 0;
  std::string format = "csv";  // or "json"
  std::string out_path;        // empty = stdout
};

// Runs the suite: `count` seeded instances, each solved by the configured
// solvers (plus `exact` when enabled and the instance is small enough).
// Per-instance rows go to out_path or stdout; the aggregate summary goes
// to stdout (stderr when rows already use stdout).
void run_bench(const BenchOptions& options);

}  // namespace cli

#endif  // TELEOSCHED_TOOLS_BENCH_HPP
