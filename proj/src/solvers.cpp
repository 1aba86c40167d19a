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

#include "teleosched/solvers.hpp"

#include <utility>

#include "teleosched/errors.hpp"
#include "teleosched/evaluate.hpp"
#include "teleosched/exact.hpp"

namespace teleosched {
namespace {

// Fixed-point loop over a single step function; steps returns the number
// of schedule changes.
template <class Step>
std::pair<Schedule, std::uint64_t> run_to_fixed_point(
    const Instance& instance, Step&& step, const GreedyConfig& config) {
  Schedule current;
  std::uint64_t steps = 0;
  for (;;) {
    if (config.max_iterations > 0 &&
        steps >= static_cast<std::uint64_t>(config.max_iterations)) {
      break;
    }
    Schedule next = step(instance, current, config);
    if (next == current) break;
    current = std::move(next);
    ++steps;
  }
  return {std::move(current), steps};
}

SolveResult from_schedule(const Instance& instance, Schedule schedule,
                          std::uint64_t steps) {
  SolveResult result;
  result.makespan = makespan(instance, schedule);
  result.schedules.push_back(std::move(schedule));
  result.proved_optimal = false;
  result.steps = steps;
  return result;
}

SolveResult from_exact(ExactSolution solution) {
  SolveResult result;
  result.schedules = std::move(solution.schedules);
  result.makespan = solution.makespan;
  result.proved_optimal = solution.proved_optimal;
  result.steps = solution.nodes_explored;
  return result;
}

}  // namespace

std::vector<std::string> solver_names() {
  return {"iterative-greedy",  "greedy-insertion",     "block-removal",
          "naive-greedy",      "comparison-greedy",    "naive+iterative",
          "comparison+iterative", "exact"};
}

SolveResult run_solver(const Instance& instance, std::string_view name,
                       const SolveOptions& options) {
  instance.validate();

  if (name == "exact") {
    return from_exact(instance.operators >= 2
                          ? solve_exact_multi(instance,
                                              options.time_limit_seconds)
                          : solve_exact(instance,
                                        options.time_limit_seconds));
  }

  if (instance.operators != 1) {
    throw InvalidArgument("solver '" + std::string(name) +
                          "' supports single-operator instances only");
  }

  const GreedyConfig& config = options.greedy;
  if (name == "iterative-greedy") {
    std::uint64_t steps = 0;
    Schedule schedule =
        iterative_greedy_from(instance, Schedule{}, config, &steps);
    return from_schedule(instance, std::move(schedule), steps);
  }
  if (name == "greedy-insertion") {
    auto [schedule, steps] =
        run_to_fixed_point(instance, greedy_insertion_step, config);
    return from_schedule(instance, std::move(schedule), steps);
  }
  if (name == "block-removal") {
    auto [schedule, steps] =
        run_to_fixed_point(instance, block_removal_step, config);
    return from_schedule(instance, std::move(schedule), steps);
  }
  if (name == "naive-greedy") {
    Schedule schedule = naive_greedy(instance);
    const std::uint64_t steps = schedule.entries.size();
    return from_schedule(instance, std::move(schedule), steps);
  }
  if (name == "comparison-greedy") {
    Schedule schedule = comparison_greedy(instance);
    const std::uint64_t steps = schedule.entries.size();
    return from_schedule(instance, std::move(schedule), steps);
  }
  if (name == "naive+iterative" || name == "comparison+iterative") {
    Schedule seed = name == "naive+iterative" ? naive_greedy(instance)
                                              : comparison_greedy(instance);
    const std::uint64_t seeded = seed.entries.size();
    std::uint64_t refine_steps = 0;
    Schedule refined =
        iterative_greedy_from(instance, std::move(seed), config, &refine_steps);
    return from_schedule(instance, std::move(refined), seeded + refine_steps);
  }

  std::string known;
  for (const std::string& candidate : solver_names()) {
    known += known.empty() ? candidate : ", " + candidate;
  }
  throw InvalidArgument("unknown solver '" + std::string(name) +
                        "'; expected one of: " + known);
}

}  // namespace teleosched
