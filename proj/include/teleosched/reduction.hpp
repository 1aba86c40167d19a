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

#ifndef TELEOSCHED_REDUCTION_HPP
#define TELEOSCHED_REDUCTION_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "teleosched/types.hpp"

namespace teleosched {

// A 3SAT formula in 2p1n form: across the whole formula every variable
// appears exactly twice positively and exactly once negatively, which
// forces the clause count to equal the variable count.
struct SatFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;  // signed 1-based literals

  // Checks literal ranges, clause-local variable distinctness and the
  // 2p1n occurrence counts; the error names the offending variable.
  void validate() const;
};

// DIMACS-like input: optional `c` comment lines, a `p cnf <vars>
// <clauses>` header, then one clause per line with exactly three nonzero
// literals and an optional trailing 0.
SatFormula parse_formula(std::string_view text);

struct ReductionParams {
  std::int64_t base = 100;  // task length unit; whole time units
  std::int64_t saving = 1;  // teleoperation gain; 0 < saving <= base / 10
};

struct ReducedInstance {
  Instance instance;
  Time target;  // per-robot autonomous mission time, base * 2 * num_vars
};

// Builds one robot per clause. Walking the variables in index order, a
// clause contributes per variable: the formula's first positive
// appearance -> tasks (base, base - saving) then (base, base); the second
// positive appearance -> the same pair reversed; a negative appearance ->
// one task (2 base, 2 base - saving); an absent variable -> one task
// (2 base, 2 base). Every mission's autonomous total is exactly the
// target, and the formula is satisfiable iff some schedule finishes at
// least `saving` early.
ReducedInstance reduce_formula(const SatFormula& formula,
                               const ReductionParams& params);

// Exhaustive truth-assignment search; requires num_vars <= 20. When
// satisfiable and `assignment` is non-null, stores a witness with bit
// v-1 holding variable v.
bool sat_brute_force(const SatFormula& formula,
                     std::uint32_t* assignment = nullptr);

struct ReductionCheck {
  bool satisfiable = false;
  bool proved = false;      // exact search finished within its time limit
  bool equivalent = false;  // satisfiable <=> makespan <= improved_target
  Time optimal_makespan;
  Time target;
  Time improved_target;  // target - saving
  Schedule witness;      // optimal schedule of the reduced instance
};

// Runs both oracles on the formula and its reduction and reports whether
// they agree. Refuses formulas with more than 6 variables to keep the
// exact search tractable.
ReductionCheck verify_reduction(const SatFormula& formula,
                                const ReductionParams& params,
                                double time_limit_seconds = 60.0);

}  // namespace teleosched

#endif  // TELEOSCHED_REDUCTION_HPP
