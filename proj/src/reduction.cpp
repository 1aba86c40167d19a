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

#include "teleosched/reduction.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "teleosched/errors.hpp"
#include "teleosched/exact.hpp"

namespace teleosched {

void SatFormula::validate() const {
  if (num_vars < 1) {
    throw ValidationError("formula needs at least one variable", "num_vars");
  }
  std::vector<int> positive(num_vars + 1, 0);
  std::vector<int> negative(num_vars + 1, 0);
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    for (int a = 0; a < 3; ++a) {
      const int lit = clause[a];
      const int var = std::abs(lit);
      if (lit == 0 || var > num_vars) {
        throw ValidationError("clause " + std::to_string(c + 1) +
                                  " has literal out of range: " +
                                  std::to_string(lit),
                              "clauses[" + std::to_string(c) + "]");
      }
      for (int b = a + 1; b < 3; ++b) {
        if (std::abs(clause[b]) == var) {
          throw ValidationError("variable " + std::to_string(var) +
                                    " appears twice in clause " +
                                    std::to_string(c + 1),
                                "variable " + std::to_string(var));
        }
      }
      (lit > 0 ? positive : negative)[var] += 1;
    }
  }
  for (int v = 1; v <= num_vars; ++v) {
    if (positive[v] != 2 || negative[v] != 1) {
      throw ValidationError(
          "variable " + std::to_string(v) + " occurs " +
              std::to_string(positive[v]) + " times positively and " +
              std::to_string(negative[v]) +
              " times negatively; 2p1n form requires 2 and 1",
          "variable " + std::to_string(v));
    }
  }
}

SatFormula parse_formula(std::string_view text) {
  SatFormula formula;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  int expected_clauses = -1;

  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank line
    if (first == "c") continue;

    if (first == "p") {
      std::string kind;
      if (!(fields >> kind >> formula.num_vars >> expected_clauses) ||
          kind != "cnf") {
        throw ParseError("expected 'p cnf <vars> <clauses>'", line_number);
      }
      continue;
    }

    if (expected_clauses < 0) {
      throw ParseError("clause before 'p cnf' header", line_number);
    }
    std::array<int, 3> clause{};
    std::istringstream nums(line);
    for (int a = 0; a < 3; ++a) {
      if (!(nums >> clause[a]) || clause[a] == 0) {
        throw ParseError("expected three nonzero literals", line_number);
      }
    }
    int trailing = 0;
    if (nums >> trailing && trailing != 0) {
      throw ParseError("expected at most three literals per clause",
                       line_number);
    }
    formula.clauses.push_back(clause);
  }

  if (expected_clauses < 0) throw ParseError("missing 'p cnf' header");
  if (static_cast<int>(formula.clauses.size()) != expected_clauses) {
    throw ParseError("header announces " + std::to_string(expected_clauses) +
                     " clauses but " + std::to_string(formula.clauses.size()) +
                     " were given");
  }
  formula.validate();
  return formula;
}

ReducedInstance reduce_formula(const SatFormula& formula,
                               const ReductionParams& params) {
  formula.validate();
  if (params.base < 1 || params.saving < 1 ||
      params.saving > params.base / 10) {
    throw InvalidArgument("need 0 < saving <= base / 10");
  }

  // Where each variable's positive appearances live, in clause order.
  const int v = formula.num_vars;
  std::vector<int> first_positive(v + 1, -1);
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    for (const int lit : formula.clauses[c]) {
      if (lit > 0 && first_positive[lit] < 0) {
        first_positive[lit] = static_cast<int>(c);
      }
    }
  }

  const Time full = Time::from_units(params.base);
  const Time gain = Time::from_units(params.saving);
  const Time twice = full + full;

  ReducedInstance out;
  out.instance.operators = 1;
  out.target = Time::from_units(2 * params.base * v);

  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    Mission mission;
    for (int var = 1; var <= v; ++var) {
      int literal = 0;
      for (const int lit : formula.clauses[c]) {
        if (std::abs(lit) == var) literal = lit;
      }
      if (literal > 0) {
        if (first_positive[var] == static_cast<int>(c)) {
          mission.tasks.push_back(Task{full, full - gain});
          mission.tasks.push_back(Task{full, full});
        } else {
          mission.tasks.push_back(Task{full, full});
          mission.tasks.push_back(Task{full, full - gain});
        }
      } else if (literal < 0) {
        mission.tasks.push_back(Task{twice, twice - gain});
      } else {
        mission.tasks.push_back(Task{twice, twice});
      }
    }
    out.instance.missions.push_back(std::move(mission));
  }
  return out;
}

bool sat_brute_force(const SatFormula& formula, std::uint32_t* assignment) {
  formula.validate();
  if (formula.num_vars > 20) {
    throw InvalidArgument("brute-force SAT limited to 20 variables");
  }
  const std::uint32_t limit = 1u << formula.num_vars;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool all = true;
    for (const auto& clause : formula.clauses) {
      bool any = false;
      for (const int lit : clause) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1u;
        if (lit > 0 ? value : !value) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) {
      if (assignment != nullptr) *assignment = mask;
      return true;
    }
  }
  return false;
}

ReductionCheck verify_reduction(const SatFormula& formula,
                                const ReductionParams& params,
                                double time_limit_seconds) {
  if (formula.num_vars > 6) {
    throw InvalidArgument(
        "verification limited to 6 variables; the exact oracle would not "
        "finish");
  }
  const ReducedInstance reduced = reduce_formula(formula, params);
  const ExactSolution exact =
      solve_exact(reduced.instance, time_limit_seconds);

  ReductionCheck check;
  check.satisfiable = sat_brute_force(formula);
  check.proved = exact.proved_optimal;
  check.optimal_makespan = exact.makespan;
  check.target = reduced.target;
  check.improved_target = reduced.target - Time::from_units(params.saving);
  check.witness = exact.schedule();
  check.equivalent =
      check.proved &&
      (check.satisfiable ? exact.makespan <= check.improved_target
                         : exact.makespan == check.target);
  return check;
}

}  // namespace teleosched
