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

#include <map>
#include <string>

#include "doctest.h"
#include "support/builders.hpp"
#include "support/lp_check.hpp"
#include "support/random.hpp"
#include "teleosched/evaluate.hpp"
#include "teleosched/exact.hpp"
#include "teleosched/lp.hpp"
#include "teleosched/rng.hpp"

using namespace teleosched;
using teleosched::testing::instance_of;
using teleosched::testing::parse_lp;
using teleosched::testing::random_small_instance;
using teleosched::testing::solve_lp_by_enumeration;
using teleosched::testing::violated_row;

namespace {

std::string var(const char* stem, int k, int j) {
  return std::string(stem) + '_' + std::to_string(k + 1) + '_' +
         std::to_string(j + 1);
}

// Decodes an exact solution into a full LP assignment: start times from
// the evaluated timeline, teleoperation binaries from the serving
// operator, and each disjunction binary from the realized interval order.
std::map<std::string, std::int64_t> decode(const Instance& instance,
                                           const ExactSolution& solution) {
  const Timeline tl = instance.operators >= 2
                          ? evaluate(instance, solution.schedules)
                          : evaluate(instance, solution.schedule());
  const bool multi = instance.operators >= 2;

  std::map<std::string, std::int64_t> values;
  values["mu"] = tl.makespan.centi;
  for (int k = 0; k < instance.robots(); ++k) {
    for (int j = 0; j < instance.tasks(k); ++j) {
      values[var("t", k, j)] = tl.start[k][j].centi;
      if (multi) {
        for (int m = 0; m < instance.operators; ++m) {
          values[var("x", k, j) + '_' + std::to_string(m + 1)] =
              tl.served_by[k][j] == m + 1 ? 100 : 0;
        }
      } else {
        values[var("x", k, j)] = tl.served_by[k][j] > 0 ? 100 : 0;
      }
    }
  }
  for (int k = 0; k < instance.robots() - 1; ++k) {
    for (int l = k + 1; l < instance.robots(); ++l) {
      for (int j = 0; j < instance.tasks(k); ++j) {
        for (int i = 0; i < instance.tasks(l); ++i) {
          const std::int64_t y =
              tl.start[k][j] >= tl.finish[l][i] ? 100 : 0;
          const std::string stem = var("y", k, j) + '_' +
                                   std::to_string(l + 1) + '_' +
                                   std::to_string(i + 1);
          if (multi) {
            for (int m = 0; m < instance.operators; ++m) {
              values[stem + '_' + std::to_string(m + 1)] = y;
            }
          } else {
            values[stem] = y;
          }
        }
      }
    }
  }
  return values;
}

}  // namespace

TEST_CASE("golden LP for the one-task model") {
  const Instance instance = instance_of({{{15, 12}}});
  CHECK(emit_lp(instance) ==
        "\\ teleoperation scheduling model: robots=1, operators=1, tasks=1\n"
        "Minimize\n"
        " obj: mu\n"
        "Subject To\n"
        " c1_1: mu - t_1_1 + 3.00 x_1_1 >= 15.00\n"
        " c2_1: t_1_1 >= 0.00\n"
        "Bounds\n"
        " t_1_1 <= 15.00\n"
        "Binary\n"
        " x_1_1\n"
        "End\n");
  // its optimum is the teleoperation time
  const auto optimum = solve_lp_by_enumeration(parse_lp(emit_lp(instance)));
  REQUIRE(optimum.has_value());
  CHECK(*optimum == 1200);
}

TEST_CASE("one cross-robot pair yields one disjunction binary") {
  const Instance instance = instance_of({{{4, 2}}, {{3, 1}}});
  const auto model = parse_lp(emit_lp(instance));
  int c4_rows = 0;
  for (const auto& row : model.rows) {
    if (row.name.rfind("c4", 0) == 0) ++c4_rows;
  }
  CHECK(c4_rows == 2);
  int y_count = 0;
  for (const auto& binary : model.binaries) {
    if (binary[0] == 'y') ++y_count;
  }
  CHECK(y_count == 1);
  CHECK(model.objective == "mu");
}

TEST_CASE("LP text is deterministic") {
  const Instance instance = instance_of({{{4, 2}, {5, 3}}, {{3, 1}}});
  CHECK(emit_lp(instance) == emit_lp(instance));
}

TEST_CASE("the emitted model's optimum equals the search optimum") {
  SplitMix64 rng(31000);
  int checked = 0;
  while (checked < 20) {
    const Instance instance =
        random_small_instance(1 + static_cast<int>(rng.below(3)), 2, rng);
    if (instance.total_tasks() > 4) continue;
    ++checked;
    const ExactSolution exact = solve_exact(instance, 30.0);
    REQUIRE(exact.proved_optimal);
    const auto optimum = solve_lp_by_enumeration(parse_lp(emit_lp(instance)));
    REQUIRE(optimum.has_value());
    CHECK(*optimum == exact.makespan.centi);
  }
}

TEST_CASE("decoded optimal solutions satisfy every emitted row") {
  SplitMix64 rng(32000);
  for (int round = 0; round < 15; ++round) {
    const Instance instance =
        random_small_instance(1 + static_cast<int>(rng.below(3)), 3, rng);
    if (instance.total_tasks() > 7) continue;
    const ExactSolution exact = solve_exact(instance, 30.0);
    REQUIRE(exact.proved_optimal);
    const auto model = parse_lp(emit_lp(instance));
    const std::string violated =
        violated_row(model, decode(instance, exact));
    CHECK_MESSAGE(violated.empty(), "violated: ", violated);
  }
}

TEST_CASE("multi-operator model") {
  Instance instance = instance_of({{{4, 2}}, {{3, 1}}}, 2);

  SUBCASE("structure: per-operator binaries and assignment rows") {
    const auto model = parse_lp(emit_lp(instance));
    int c6_rows = 0;
    int c4_rows = 0;
    for (const auto& row : model.rows) {
      if (row.name.rfind("c6", 0) == 0) ++c6_rows;
      if (row.name.rfind("c4", 0) == 0) ++c4_rows;
    }
    CHECK(c6_rows == 2);   // one per task
    CHECK(c4_rows == 4);   // two rows per (pair, operator)
    bool has_x112 = false;
    for (const auto& binary : model.binaries) {
      if (binary == "x_1_1_2") has_x112 = true;
    }
    CHECK(has_x112);
  }

  SUBCASE("optimum matches the multi-operator search") {
    const ExactSolution exact = solve_exact_multi(instance, 30.0);
    REQUIRE(exact.proved_optimal);
    CHECK(exact.makespan == Time::from_units(2));  // both served at once
    const auto optimum = solve_lp_by_enumeration(parse_lp(emit_lp(instance)));
    REQUIRE(optimum.has_value());
    CHECK(*optimum == exact.makespan.centi);
  }

  SUBCASE("decoded multi-operator solutions satisfy every row") {
    SplitMix64 rng(33000);
    for (int round = 0; round < 6; ++round) {
      Instance random = random_small_instance(2, 2, rng);
      random.operators = 2;
      const ExactSolution exact = solve_exact_multi(random, 30.0);
      REQUIRE(exact.proved_optimal);
      const auto model = parse_lp(emit_lp(random));
      const std::string violated =
          violated_row(model, decode(random, exact));
      CHECK_MESSAGE(violated.empty(), "violated: ", violated);
    }
  }
}
